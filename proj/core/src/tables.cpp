#include "flagprim/tables.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagprim {

int expected_bound(const SimpleType& t) {
  t.validate();
  const int l = t.rank;
  switch (t.family) {
    case Family::A: return l + 2;
    case Family::B:
    case Family::C: return l + 1;
    case Family::D: return l;
    case Family::E: return 4;
    case Family::F: return 3;
    case Family::G: return 2;
  }
  return 0;
}

LeviRow expected_levi_row(const SimpleType& t) {
  t.validate();
  const long l = t.rank;
  LeviRow r;
  switch (t.family) {
    case Family::A:
      r.nodes = l == 1 ? std::vector<int>{1} : std::vector<int>{1, static_cast<int>(l)};
      r.fraction = make_rational(l + 2);
      break;
    case Family::B:
      r.nodes = {1};
      r.fraction = make_rational(2 * l * l + l, 2 * l - 1);
      break;
    case Family::C:
      r.nodes = {1};
      r.fraction = make_rational(2 * l * l + 1, 2 * l - 1);
      break;
    case Family::D:
      r.nodes = {1};
      r.fraction = make_rational(2 * l * l - l, 2 * l - 2);
      break;
    case Family::E:
      if (l == 6) { r.nodes = {1, 6}; r.fraction = make_rational(39, 8); }
      if (l == 7) { r.nodes = {7}; r.fraction = make_rational(133, 27); }
      if (l == 8) { r.nodes = {8}; r.fraction = make_rational(248, 57); }
      break;
    case Family::F:
      r.nodes = {1, 4};
      r.fraction = make_rational(52, 15);
      break;
    case Family::G:
      r.nodes = {1, 2};
      r.fraction = make_rational(14, 5);
      break;
  }
  return r;
}

EqualIndexRule equal_index_rule(const SimpleType& t, int node, int d) {
  t.validate();
  const int l = t.rank;
  if (node < 1 || node > l) throw std::invalid_argument("equal_index_rule: node out of range");
  if (d < 3) throw std::invalid_argument("equal_index_rule: needs d >= 3");
  EqualIndexRule r;
  switch (t.family) {
    case Family::A:
      r.rule = "table2.A";
      r.primitive = static_cast<long>(d) * node * (l + 1 - node) < static_cast<long>(l + 1) * (l + 1);
      break;
    case Family::B:
      r.rule = "table2.B";
      r.primitive = d == 3 && (node == 1 || node == l);
      break;
    case Family::C:
      r.rule = "table2.C";
      r.primitive = d == 3 && (node == 1 || node == l);
      break;
    case Family::D:
      r.rule = "table2.D";
      r.primitive = d == 3 && (node == 1 || node == l - 1 || node == l);
      break;
    case Family::E:
      if (l == 6) {
        r.rule = "table2.E6";
        r.primitive = d <= 4 && (node == 1 || node == 6);
      } else if (l == 7) {
        r.rule = "table2.E7";
        r.primitive = d == 3 && node == 7;
      } else {
        r.rule = "table2.absent";
      }
      break;
    case Family::F:
    case Family::G:
      r.rule = "table2.absent";
      break;
  }
  return r;
}

const std::vector<TripleRow>& triple_rows() {
  static const std::vector<TripleRow> rows = {
      {"table3.1", Family::A, "s1={1}"},
      {"table3.2", Family::A, "|s1|=|s2|=1"},
      {"table3.3", Family::A, "|s1|=|s2|=1; |s3|=2"},
      {"table3.4", Family::A, "|s1|=1; |s2|=2; |s3|=3"},
      {"table3.5", Family::A, "|s1|=1; |s2|=2; |s3|=4"},
      {"table3.6", Family::A, "s1={2}; |s2|=2; |s3|>=2"},
      {"table3.7", Family::A, "|s1|=1; s2={i,i+1} (i<l) or {1,j} (j!=1); |s3|>=2"},
      {"table3.8", Family::B, "s1={1}; |s2|=1"},
      {"table3.9", Family::B, "s1=s2={l}"},
      {"table3.10", Family::C, "s1=s3={l}"},
      {"table3.11", Family::C, "s1={l}; s2={i}, i!=l; s3={j}, j!=l"},
      {"table3.12", Family::C, "s1={l}; s2={i}, i!=l; |s3|=2"},
      {"table3.13", Family::C, "s1={l}; s2={1}; s3!={l}"},
      {"table3.14", Family::C, "s1={1}; s2={i}, i!=l; s3!={l}"},
      {"table3.15", Family::D, "s1={1}; |s2|=1"},
      {"table3.16", Family::D, "s1={l-1}; s2={l}"},
      {"table3.17", Family::D, "s1=s2={l}"},
      {"table3.18", Family::D, "s1={3}; s2={l}"},
      {"table3.19", Family::E, "E6: s1={1}; s2={i}, i!=4"},
      {"table3.20", Family::E, "E7: s1 in {{1},{2},{7}}; s2={7}"},
  };
  return rows;
}

namespace {

bool is_node(const Support& s, int i) { return s.size() == 1 && s[0] == i; }
int single(const Support& s) { return s.size() == 1 ? s[0] : 0; }
int size(const Support& s) { return static_cast<int>(s.size()); }

bool holds(const SimpleType& t, int row, const Support& a, const Support& b, const Support& c) {
  const int l = t.rank;
  switch (row) {
    case 1: return is_node(a, 1);
    case 2: return size(a) == 1 && size(b) == 1;
    case 3: return size(a) == 1 && size(b) == 1 && size(c) == 2;
    case 4: return size(a) == 1 && size(b) == 2 && size(c) == 3;
    case 5: return size(a) == 1 && size(b) == 2 && size(c) == 4;
    case 6: return is_node(a, 2) && size(b) == 2 && size(c) >= 2;
    case 7:
      return size(a) == 1 && size(b) == 2 && (b[1] == b[0] + 1 || b[0] == 1) && size(c) >= 2;
    case 8: return is_node(a, 1) && size(b) == 1;
    case 9: return is_node(a, l) && is_node(b, l);
    case 10: return is_node(a, l) && is_node(c, l);
    case 11: return is_node(a, l) && single(b) && single(b) != l && single(c) && single(c) != l;
    case 12: return is_node(a, l) && single(b) && single(b) != l && size(c) == 2;
    case 13: return is_node(a, l) && is_node(b, 1) && !is_node(c, l);
    case 14: return is_node(a, 1) && single(b) && single(b) != l && !is_node(c, l);
    case 15: return is_node(a, 1) && size(b) == 1;
    case 16: return is_node(a, l - 1) && is_node(b, l);
    case 17: return is_node(a, l) && is_node(b, l);
    case 18: return is_node(a, 3) && is_node(b, l);
    case 19: return l == 6 && is_node(a, 1) && single(b) && single(b) != 4;
    case 20: return l == 7 && (is_node(a, 1) || is_node(a, 2) || is_node(a, 7)) && is_node(b, 7);
  }
  return false;
}

int row_number(const std::string& id) {
  const std::string prefix = "table3.";
  if (id.rfind(prefix, 0) != 0) throw std::invalid_argument("unknown triple row: " + id);
  return std::stoi(id.substr(prefix.size()));
}

Support permute(const Support& s, const std::vector<int>& p) {
  Support out;
  for (int v : s) out.push_back(p[v - 1] + 1);
  std::sort(out.begin(), out.end());
  return out;
}

void check_supports(const SimpleType& t, const SupportTriple& s) {
  for (const auto& x : s) {
    if (x.empty()) throw std::invalid_argument("triple_rule: empty support");
    for (int v : x)
      if (v < 1 || v > t.rank) throw std::invalid_argument("triple_rule: node out of range");
  }
}

}  // namespace

bool triple_row_holds(const SimpleType& t, const std::string& id, const SupportTriple& s) {
  t.validate();
  check_supports(t, s);
  const int row = row_number(id);
  const auto& r = triple_rows().at(row - 1);
  if (r.family != t.family) return false;
  return holds(t, row, s[0], s[1], s[2]);
}

std::optional<std::string> triple_rule(const SimpleType& t, const SupportTriple& s) {
  t.validate();
  check_supports(t, s);
  const auto autos = diagram_automorphisms(t);
  std::array<int, 3> order{0, 1, 2};
  std::vector<std::array<Support, 3>> variants;
  do {
    for (const auto& p : autos)
      variants.push_back({permute(s[order[0]], p), permute(s[order[1]], p), permute(s[order[2]], p)});
  } while (std::next_permutation(order.begin(), order.end()));
  const auto& rows = triple_rows();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (rows[k].family != t.family) continue;
    for (const auto& v : variants)
      if (holds(t, static_cast<int>(k) + 1, v[0], v[1], v[2])) return rows[k].id;
  }
  return std::nullopt;
}

}  // namespace flagprim
