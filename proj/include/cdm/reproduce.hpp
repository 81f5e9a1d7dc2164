#pragma once

#include <string>
#include <vector>

namespace cdm {

/// One golden-reproduction target: builds an object through the library
/// pipeline and diffs it against the embedded reference data.
struct ReproduceReport {
    std::string target;
    bool ok = false;
    std::string detail;  // first difference or a short summary
};

/// Names accepted by reproduce(); see reproduce.cpp for what each builds.
const std::vector<std::string>& reproduce_targets();

ReproduceReport reproduce(const std::string& target);

std::vector<ReproduceReport> reproduce_all();

}  // namespace cdm
