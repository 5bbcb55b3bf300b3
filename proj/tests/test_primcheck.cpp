#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "flagprim/chars.hpp"
#include "flagprim/flagorbit.hpp"
#include "flagprim/primcheck.hpp"
#include "flagprim/tables.hpp"
#include "test_support.hpp"

using namespace flagprim;
using fpt::fund;

namespace {

// invariants in the tensor product of SL2 modules of the given highest weights, by Clebsch-Gordan
long long sl2_invariants(const std::vector<int>& degrees) {
  std::map<int, long long> cur{{0, 1}};
  for (int t : degrees) {
    std::map<int, long long> next;
    for (auto [s, m] : cur)
      for (int i = 0; i <= std::min(s, t); ++i) next[s + t - 2 * i] += m;
    cur = std::move(next);
  }
  return cur.count(0) ? cur[0] : 0;
}

bool proportional(const Weight& a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (static_cast<long>(a[i]) * b[j] != static_cast<long>(a[j]) * b[i]) return false;
  return true;
}

std::vector<Support> subsets(int l, int max_size) {
  std::vector<Support> out;
  for (unsigned m = 1; m < (1u << l); ++m) {
    Support s;
    for (int i = 0; i < l; ++i)
      if (m & (1u << i)) s.push_back(i + 1);
    if (static_cast<int>(s.size()) <= max_size || static_cast<int>(s.size()) == l) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](const Support& a, const Support& b) { return a.size() < b.size(); });
  return out;
}

Weight from_support(int r, const Support& s) {
  Weight w(r, 0);
  for (int v : s) w[v - 1] = 1;
  return w;
}

CheckOptions quick(int bound = 4) {
  CheckOptions o;
  o.search_bound = bound;
  o.budget = std::chrono::milliseconds(3000);
  return o;
}

}  // namespace

TEST(Tables, EqualIndexRules) {
  auto t = SimpleType::parse("A3");
  EXPECT_TRUE(equal_index_rule(t, 1, 5).primitive);
  EXPECT_FALSE(equal_index_rule(t, 1, 6).primitive);
  EXPECT_TRUE(equal_index_rule(t, 2, 3).primitive);
  EXPECT_FALSE(equal_index_rule(t, 2, 4).primitive);
  EXPECT_TRUE(equal_index_rule(SimpleType::parse("D5"), 4, 3).primitive);
  EXPECT_FALSE(equal_index_rule(SimpleType::parse("D5"), 2, 3).primitive);
  EXPECT_TRUE(equal_index_rule(SimpleType::parse("E6"), 6, 4).primitive);
  EXPECT_FALSE(equal_index_rule(SimpleType::parse("E6"), 6, 5).primitive);
  EXPECT_TRUE(equal_index_rule(SimpleType::parse("E7"), 7, 3).primitive);
  EXPECT_FALSE(equal_index_rule(SimpleType::parse("G2"), 1, 3).primitive);
  EXPECT_THROW(equal_index_rule(t, 4, 3), std::invalid_argument);
  EXPECT_THROW(equal_index_rule(t, 1, 2), std::invalid_argument);
}

TEST(Tables, TripleMatching) {
  auto a3 = SimpleType::parse("A3");
  EXPECT_EQ(triple_rule(a3, {Support{2, 3}, Support{1}, Support{1, 2, 3}}), "table3.1");
  // the diagram flip sends node 3 to node 1
  EXPECT_EQ(triple_rule(a3, {Support{3}, Support{1, 2}, Support{1, 2, 3}}), "table3.1");
  EXPECT_EQ(triple_rule(a3, {Support{2}, Support{1, 3}, Support{1, 2, 3}}), "table3.4");
  EXPECT_FALSE(triple_rule(a3, {Support{1, 2}, Support{2, 3}, Support{1, 3}}).has_value());
  auto c3 = SimpleType::parse("C3");
  EXPECT_EQ(triple_rule(c3, {Support{3}, Support{1, 2}, Support{3}}), "table3.10");
  EXPECT_FALSE(triple_rule(c3, {Support{2}, Support{2}, Support{2}}).has_value());
  auto d4 = SimpleType::parse("D4");
  // triality moves node 3 onto node 1
  EXPECT_EQ(triple_rule(d4, {Support{1, 2, 3, 4}, Support{2}, Support{3}}), "table3.15");
  EXPECT_EQ(triple_rule(SimpleType::parse("E7"), {Support{2}, Support{7}, Support{3, 5}}), "table3.20");
  EXPECT_FALSE(triple_rule(SimpleType::parse("F4"), {Support{1}, Support{1}, Support{1}}).has_value());
  EXPECT_THROW(triple_rule(a3, {Support{}, Support{1}, Support{1}}), std::invalid_argument);
  EXPECT_THROW(triple_rule(a3, {Support{5}, Support{1}, Support{1}}), std::invalid_argument);
}

TEST(Tables, LeviRowsMatchRootData) {
  for (const auto& name : fpt::types_up_to_rank(8)) {
    auto R = root_system(name);
    auto row = expected_levi_row(R->type());
    auto bd = R->bound_data();
    const Rational computed(bd.num, bd.den);
    EXPECT_EQ(expected_bound(R->type()), R->bound_bG()) << name;
    EXPECT_EQ(Integer(computed.get_num() / computed.get_den()), expected_bound(R->type())) << name;
    if (R->type().family == Family::C) continue;
    // printed node sets list one node per automorphism orbit
    std::set<int> closure;
    for (const auto& p : diagram_automorphisms(R->type()))
      for (int v : row.nodes) closure.insert(p[v - 1] + 1);
    EXPECT_EQ(std::vector<int>(closure.begin(), closure.end()), bd.argmax) << name;
    EXPECT_EQ(row.fraction, computed) << name;
  }
}

TEST(Tables, PrintedSymplecticFractionDisagrees) {
  // the printed C column is inconsistent with the printed bound l + 1; root data agrees with the bound
  for (int l = 3; l <= 8; ++l) {
    auto R = root_system("C" + std::to_string(l));
    auto printed = expected_levi_row(R->type()).fraction;
    EXPECT_EQ(Integer(printed.get_num() / printed.get_den()), l);
    EXPECT_EQ(R->bound_bG(), l + 1);
    EXPECT_EQ(Rational(R->bound_data().num, R->bound_data().den), make_rational(2L * l * l + l, 2L * l - 1));
  }
  EXPECT_EQ(root_system("C2")->bound_data().argmax, (std::vector<int>{1, 2}));
}

TEST(PrimCheck, SL2) {
  auto R = root_system("A1");
  for (int d = 1; d <= 3; ++d) {
    std::vector<Weight> w(d, Weight{1});
    auto v = check_primitive(*R, w);
    EXPECT_EQ(v.status, Status::Yes) << d;
    EXPECT_TRUE(replay_primitive(*R, w, v));
  }
  for (int d = 4; d <= 5; ++d) {
    std::vector<Weight> w(d, Weight{2});
    auto v = check_primitive(*R, w);
    ASSERT_EQ(v.status, Status::No) << d;
    ASSERT_EQ(v.certificate.kind, CertKind::Witness);
    EXPECT_TRUE(replay_primitive(*R, w, v));
    std::vector<int> degrees;
    for (std::size_t i = 0; i < w.size(); ++i) degrees.push_back(v.certificate.witness[i] * v.certificate.weights[i][0]);
    EXPECT_GE(sl2_invariants(degrees), 2);
    EXPECT_EQ(sl2_invariants(degrees), v.certificate.value);
  }
}

TEST(PrimCheck, SL2MatchesBruteForce) {
  // primitivity of (a_1 w, .., a_d w) against direct scanning of scalings
  auto R = root_system("A1");
  for (int d = 3; d <= 5; ++d) {
    std::vector<Weight> w;
    for (int i = 0; i < d; ++i) w.push_back(Weight{1 + i % 2});
    bool brute_no = false;
    std::vector<int> n(d, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == d) {
        std::vector<int> deg;
        for (int i = 0; i < d; ++i) deg.push_back(n[i] * w[i][0]);
        if (sl2_invariants(deg) >= 2) brute_no = true;
        return;
      }
      for (int v = 0; v <= left; ++v) {
        n[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    rec(0, 6);
    EXPECT_EQ(check_primitive(*R, w).status == Status::No, brute_no) << d;
  }
}

TEST(PrimCheck, E6) {
  auto R = root_system("E6");
  std::vector<Weight> four(4, fund(6, 1));
  auto v = check_primitive(*R, four);
  EXPECT_EQ(v.status, Status::Yes);
  EXPECT_EQ(v.certificate.rule, "table2.E6");
  std::vector<Weight> five(5, fund(6, 1));
  auto n = check_primitive(*R, five);
  EXPECT_EQ(n.status, Status::No);
  EXPECT_TRUE(replay_primitive(*R, five, n));
}

TEST(PrimCheck, LengthGuardAndBounds) {
  auto R = root_system("A2");
  Weight reg{1, 1};
  std::vector<Weight> w(8, reg);
  CheckOptions o = quick(3);
  auto v = check_primitive(*R, w, o);
  ASSERT_EQ(v.status, Status::No);
  bool has_sep = v.certificate.rule == "sep";
  for (const auto& c : v.extra) has_sep = has_sep || c.rule == "sep";
  EXPECT_TRUE(has_sep);
  EXPECT_TRUE(replay_primitive(*R, w, v));

  auto a1 = prim_lower_bounds(*root_system("A1"));
  EXPECT_EQ(a1.lower, 3);
  EXPECT_TRUE(a1.exact());
  EXPECT_EQ(prim_lower_bounds(*root_system("E6")).lower, 4);
  auto g2 = prim_lower_bounds(*root_system("G2"));
  EXPECT_EQ(g2.lower, 2);
  EXPECT_EQ(g2.upper_weyl, 13);
  EXPECT_EQ(g2.upper_sep, 4);
  for (const auto& name : fpt::types_up_to_rank(3)) {
    auto b = prim_lower_bounds(*root_system(name));
    EXPECT_LE(b.lower, b.upper_sep) << name;
  }
}

TEST(PrimCheck, QuiverRoute) {
  auto R = root_system("A3");
  std::vector<Weight> w{fund(3, 1), fund(3, 2), fund(3, 2), fund(3, 3)};
  auto v = check_primitive(*R, w, quick());
  EXPECT_NE(v.status, Status::Unknown);
  EXPECT_TRUE(replay_primitive(*R, w, v));
  // multiples do not change the answer
  std::vector<Weight> m{fund(3, 1, 2), fund(3, 2, 3), fund(3, 2), fund(3, 3, 5)};
  EXPECT_EQ(check_primitive(*R, m, quick()).status, v.status);
}

TEST(PrimCheck, Errors) {
  auto R = root_system("A2");
  EXPECT_THROW(check_primitive(*R, {}), std::invalid_argument);
  EXPECT_THROW(check_primitive(*R, {Weight{0, 0}}), std::invalid_argument);
  EXPECT_THROW(check_primitive(*R, {Weight{-1, 1}}), std::invalid_argument);
  EXPECT_THROW(check_primitive(*R, {Weight{1}}), std::invalid_argument);
  EXPECT_THROW(check_primitive_at(*R, {Weight{1, 0}}, Weight{-1, 0}), std::invalid_argument);
}

TEST(PrimitiveAt, Basics) {
  auto R = root_system("A2");
  auto v = check_primitive_at(*R, {Weight{2, 1}}, Weight{1, 1});
  EXPECT_EQ(v.status, Status::Yes);
  std::mt19937_64 rng(7);
  for (const auto& name : {"A2", "A3", "A4"}) {
    auto S = root_system(name);
    const int r = S->rank();
    for (int k = 0; k < 10; ++k) {
      Weight mu = fpt::random_nonzero_weight(rng, r, 3);
      std::vector<Weight> w{fund(r, 1), fund(r, 1)};
      auto p = check_primitive_at(*S, w, mu, quick());
      EXPECT_EQ(p.status, Status::Yes) << name;
      EXPECT_TRUE(replay_primitive_at(*S, w, mu, p));
    }
  }
}

TEST(PrimitiveAt, E6Multiplicity) {
  auto R = root_system("E6");
  std::vector<Weight> w{fund(6, 1, 4), fund(6, 1, 4), fund(6, 1, 3)};
  Weight mu{1, 0, 3, 0, 1, 0};
  auto v = check_primitive_at(*R, w, mu, quick(3));
  ASSERT_EQ(v.status, Status::No);
  EXPECT_GE(v.certificate.value, 2);
  EXPECT_TRUE(replay_primitive_at(*R, w, mu, v));
}

TEST(InvariantFree, Examples) {
  auto R = root_system("A2");
  auto yes = check_invariant_free(*R, {Weight{1, 0}, Weight{1, 0}});
  EXPECT_EQ(yes.status, Status::Yes);
  auto no = check_invariant_free(*R, {Weight{1, 0}, Weight{0, 1}});
  EXPECT_EQ(no.status, Status::No);
  EXPECT_EQ(no.certificate.kind, CertKind::ConeViolation);
  EXPECT_TRUE(replay_invariant_free(*R, {Weight{1, 0}, Weight{0, 1}}, no));
  auto many = check_invariant_free(*R, {Weight{1, 0}, Weight{1, 0}, Weight{1, 0}});
  EXPECT_EQ(many.status, Status::No);
  EXPECT_EQ(many.certificate.kind, CertKind::Bound);
  EXPECT_EQ(check_invariant_free(*R, {Weight{3, 1}}).status, Status::Yes);
}

TEST(InvariantFree, PairRuleRandomized) {
  std::mt19937_64 rng(11);
  for (const auto& name : {"A3", "C3"}) {
    auto R = root_system(name);
    for (int k = 0; k < 100; ++k) {
      std::vector<Weight> w{fpt::random_nonzero_weight(rng, 3, 2), fpt::random_nonzero_weight(rng, 3, 2)};
      auto v = check_invariant_free(*R, w);
      bool expected = !proportional(w[0], dual_weight(*R, w[1]));
      EXPECT_EQ(v.status, expected ? Status::Yes : Status::No);
      EXPECT_TRUE(replay_invariant_free(*R, w, v));
    }
  }
}

TEST(InvariantFree, WitnessesAgreeWithCones) {
  // cone screens passed but an invariant shows up: the witness must replay
  std::mt19937_64 rng(3);
  auto R = root_system("A3");
  for (int k = 0; k < 30; ++k) {
    std::vector<Weight> w;
    for (int i = 0; i < 3; ++i) w.push_back(fpt::random_nonzero_weight(rng, 3, 1));
    auto v = check_invariant_free(*R, w, quick(4));
    EXPECT_TRUE(replay_invariant_free(*R, w, v));
    if (v.status == Status::No && v.certificate.kind == CertKind::Witness) EXPECT_GE(v.certificate.value, 1);
  }
}

TEST(Stable, Criteria) {
  auto a1 = root_system("A1");
  std::vector<Weight> three(3, Weight{1});
  StableOptions nosep;
  nosep.use_sep = false;
  auto v = check_stable(*a1, three, nosep);
  ASSERT_EQ(v.status, Status::Yes);
  EXPECT_EQ(v.certificate.rule, "dual-in-interior");
  EXPECT_TRUE(replay_stable(*a1, three, v));
  auto s = check_stable(*a1, three);
  EXPECT_EQ(s.certificate.rule, "sep");
  EXPECT_TRUE(replay_stable(*a1, three, s));

  auto a2 = root_system("A2");
  EXPECT_EQ(check_stable(*a2, {Weight{1, 0}}).status, Status::Unknown);
  // (w, w*) for regular w lies on the pair cone interior
  auto pair = check_stable(*a2, {Weight{1, 2}, Weight{2, 1}}, nosep);
  EXPECT_EQ(pair.status, Status::Yes);
  EXPECT_TRUE(replay_stable(*a2, {Weight{1, 2}, Weight{2, 1}}, pair));
  EXPECT_EQ(check_stable(*a2, {Weight{1, 0}, Weight{1, 0}}, nosep).status, Status::Unknown);
  std::vector<Weight> six(6, Weight{1, 1});
  EXPECT_EQ(check_stable(*a2, six).status, Status::Yes);
}

TEST(Stable, PartitionAndInnerCone) {
  auto a2 = root_system("A2");
  StableOptions nosep;
  nosep.use_sep = false;
  std::vector<Weight> w{Weight{1, 0}, Weight{0, 1}, Weight{1, 0}, Weight{0, 1}};
  auto v = check_stable(*a2, w, nosep);
  ASSERT_EQ(v.status, Status::Yes);
  EXPECT_TRUE(replay_stable(*a2, w, v));
  std::vector<Weight> t{Weight{1, 1}, Weight{1, 1}, Weight{1, 1}};
  auto u = check_stable(*a2, t, nosep);
  EXPECT_EQ(u.status, Status::Yes);
  EXPECT_TRUE(replay_stable(*a2, t, u));
}

TEST(Stable, WitnessPoint) {
  auto a1 = root_system("A1");
  auto p = stable_witness_point(*a1, {Weight{1}, Weight{1}});
  ASSERT_TRUE(p.applicable);
  EXPECT_TRUE(p.verified);
  EXPECT_EQ(p.points[0][0] * p.points[1][0], -1);
  auto a2 = root_system("A2");
  auto q = stable_witness_point(*a2, std::vector<Weight>(6, Weight{1, 1}));
  ASSERT_TRUE(q.applicable);
  EXPECT_TRUE(q.verified);
  EXPECT_FALSE(stable_witness_point(*a2, std::vector<Weight>(3, Weight{1, 1})).applicable);
}

TEST(PrimProperties, PermutationAutomorphismHereditySaturation) {
  std::mt19937_64 rng(42);
  const std::vector<std::string> types{"A2", "A3", "B3", "C3", "D4", "G2"};
  int decided = 0;
  for (int trial = 0; trial < 36; ++trial) {
    auto R = root_system(types[trial % types.size()]);
    const int r = R->rank();
    const int d = 3 + static_cast<int>(rng() % 2);
    std::vector<Weight> w;
    for (int i = 0; i < d; ++i) w.push_back(fpt::random_nonzero_weight(rng, r, 1));
    auto o = quick(4);
    auto v = check_primitive(*R, w, o);
    EXPECT_TRUE(replay_primitive(*R, w, v)) << R->type().name();
    if (v.status != Status::Unknown) ++decided;

    auto p = w;
    std::shuffle(p.begin(), p.end(), rng);
    EXPECT_EQ(check_primitive(*R, p, o).status, v.status) << R->type().name();

    for (const auto& perm : diagram_automorphisms(R->type())) {
      std::vector<Weight> img;
      for (const auto& x : w) {
        Weight y(r, 0);
        for (int k = 0; k < r; ++k) y[perm[k]] = x[k];
        img.push_back(y);
      }
      EXPECT_EQ(check_primitive(*R, img, o).status, v.status) << R->type().name();
    }

    for (int drop = 0; drop < d; ++drop) {
      auto sub = w;
      sub.erase(sub.begin() + drop);
      if (check_primitive(*R, sub, o).status == Status::No) EXPECT_NE(v.status, Status::Yes) << R->type().name();
    }

    if (fundamental_multiples(w)) {
      auto m = w;
      for (auto& x : m)
        for (auto& c : x) c *= 1 + static_cast<int>(rng() % 3);
      EXPECT_EQ(check_primitive(*R, m, o).status, v.status) << R->type().name();
    }
  }
  EXPECT_GT(decided, 18);
}

TEST(PrimProperties, TripleRowsNeverNo) {
  // coefficient-one weights on supports matched row by row, l <= 6
  std::vector<std::string> types;
  for (int l = 2; l <= 6; ++l) types.push_back("A" + std::to_string(l));
  for (int l = 3; l <= 6; ++l) types.push_back("B" + std::to_string(l));
  for (int l = 2; l <= 6; ++l) types.push_back("C" + std::to_string(l));
  for (int l = 4; l <= 6; ++l) types.push_back("D" + std::to_string(l));
  types.push_back("E6");
  int instances = 0, incomplete = 0;
  std::map<std::string, int> per_row;
  for (const auto& name : types) {
    auto R = root_system(name);
    const int l = R->rank();
    auto subs = subsets(l, l <= 4 ? l : 2);
    std::map<std::string, int> taken;
    for (const auto& a : subs)
      for (const auto& b : subs)
        for (const auto& c : subs)
          for (const auto& row : triple_rows()) {
            if (row.family != R->type().family || taken[row.id] >= 2) continue;
            if (!triple_row_holds(R->type(), row.id, {a, b, c})) continue;
            ++taken[row.id];
            ++per_row[row.id];
            ++instances;
            std::vector<Weight> w{from_support(l, a), from_support(l, b), from_support(l, c)};
            auto v = check_primitive(*R, w, quick(6));
            EXPECT_NE(v.status, Status::No) << name << " " << row.id;
            auto s = search_witness(*R, w, Weight(l, 0), 2, 6, std::chrono::milliseconds(4000));
            EXPECT_FALSE(s.found) << name << " " << row.id;
            if (!s.complete) ++incomplete;
          }
  }
  for (const auto& row : triple_rows())
    if (row.id != "table3.20") EXPECT_GT(per_row[row.id], 0) << row.id;
  RecordProperty("instances", instances);
  RecordProperty("incomplete_searches", incomplete);
  std::cout << "triple-row instances " << instances << ", searches cut by budget " << incomplete << "\n";
}

TEST(PrimProperties, TripleRowsOpenForClassicalTypes) {
  for (const auto& name : {"A3", "A4", "A5", "B3", "B4", "C3", "C4", "D4", "D5"}) {
    auto R = root_system(name);
    const int l = R->rank();
    auto subs = subsets(l, 2);
    std::map<std::string, int> taken;
    for (const auto& a : subs)
      for (const auto& b : subs)
        for (const auto& c : subs)
          for (const auto& row : triple_rows()) {
            if (row.family != R->type().family || taken[row.id] >= 3) continue;
            if (!triple_row_holds(R->type(), row.id, {a, b, c})) continue;
            ++taken[row.id];
            auto f = open_orbit_flags(*R, {a, b, c}, 20, 42);
            EXPECT_EQ(f.status, OrbitStatus::Open) << name << " " << row.id;
          }
  }
}
