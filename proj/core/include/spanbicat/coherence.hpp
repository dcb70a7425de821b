#pragma once

#include "spanbicat/bicat.hpp"
#include "spanbicat/report.hpp"

namespace spanbicat {

// Scans every vertical-category law, hcomp functoriality and interchange
// instance, associator/unitor invertibility and naturality, pentagon and
// triangle among base cells whose composites are present. Instances that
// need a composite outside the fragment are counted as skipped.
Report check_coherence(const BicatFragment& b, const CheckOptions& opts = {});

}  // namespace spanbicat
