#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "conductor/dualgraph.hpp"

namespace conductor::dualgraph {

// Minimal sncd configurations of the Kodaira fibre types. Accepted labels:
// I0, I<n> (n >= 1), II, III, IV, I<n>* (n >= 0), IV*, III*, II*.
// I0 is a single genus-one component and I1 the resolved nodal cubic
// (components of multiplicity 1 and 2 meeting twice). Throws kUnknownType.
SncdGraph kodaira_catalog(std::string_view label);

// A representative list of labels, used by tests and the CLI.
std::vector<std::string> kodaira_labels(long max_n = 4);

}  // namespace conductor::dualgraph
