#pragma once

#include <optional>

#include "boolnet/net_type.hpp"

namespace boolnet {

enum class Hardness { np_complete, polynomial, out_of_table };

// Classification of synthesis from g-bounded inputs for every net type that
// contains nop.  Types without nop are outside the table.
Hardness classify(NetType type, int g);

// Table row (1..11) the type falls into; nullopt without nop.  Rows 1..9
// are NP-complete from their bound threshold upward, rows 10 and 11 are
// polynomial for every bound.
std::optional<int> classify_row(NetType type);

// Smallest g for which synthesis is NP-complete; nullopt when polynomial
// for every g or out of the table.
std::optional<int> np_threshold(NetType type);

}  // namespace boolnet
