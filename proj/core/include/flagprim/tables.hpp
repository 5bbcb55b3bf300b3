#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flagprim/rootsys.hpp"

namespace flagprim {

// expected bound b_G for open orbits on products of flag varieties
int expected_bound(const SimpleType& t);

// maximizing nodes and the fraction 2 dim G / (dim G - dim L), as printed
struct LeviRow {
  std::vector<int> nodes;
  Rational fraction;
};
LeviRow expected_levi_row(const SimpleType& t);

// d >= 3 copies of multiples of one fundamental weight
struct EqualIndexRule {
  bool primitive = false;
  std::string rule;
};
EqualIndexRule equal_index_rule(const SimpleType& t, int node, int d);

struct TripleRow {
  std::string id;
  Family family;
  std::string condition;
};
const std::vector<TripleRow>& triple_rows();

using SupportTriple = std::array<Support, 3>;

// first listed row matched by some reordering and diagram automorphism
std::optional<std::string> triple_rule(const SimpleType& t, const SupportTriple& s);
// the row predicate on the triple exactly as ordered
bool triple_row_holds(const SimpleType& t, const std::string& id, const SupportTriple& s);

}  // namespace flagprim
