#pragma once

#include "wsuper/super_algebra.hpp"

#include <string>

namespace wsuper {

/// Structure-constant document:
/// {name, dim, parity:[0/1..], brackets:[{i,j,terms:[{k,num,den}]}], form:[{i,j,num,den}]}
/// with integers as decimal strings. An optional "labels" array carries basis names.
std::string export_table(const SuperAlgebra& alg);

/// Parses and validates a document; throws InputError on malformed input and
/// AlgebraError naming the first violated axiom.
SuperAlgebra import_table(const std::string& document);

}  // namespace wsuper
