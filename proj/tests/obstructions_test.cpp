#include "oracles.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace betti;
using namespace testutil;

namespace {

std::multiset<std::pair<FindingKind, Side>> kinds(const std::vector<Finding>& f) {
  std::multiset<std::pair<FindingKind, Side>> out;
  for (const auto& x : f) out.insert({x.kind, x.side});
  return out;
}

std::vector<Finding> on_d(const BettiDiagram& d) {
  std::vector<Finding> out;
  for (const auto& f : buchsbaum_rim_findings(d))
    if (f.side == Side::D) out.push_back(f);
  return out;
}

bool leaf_codimension(const BettiDiagram& d) {
  try {
    return codimension_check(d).has_value();
  } catch (const NotApplicable&) {
    return false;
  }
}

// Presentation data recomputed from scratch: a, sorted j's, generators at 0.
struct Presentation {
  std::int64_t a = 0;
  std::vector<int> j;
  BettiDiagram twisted;
};

Presentation presentation(const BettiDiagram& d) {
  Presentation p;
  int shift = d.entries().begin()->first.second;
  for (const auto& [k, v] : d.entries()) p.twisted.set(k.first, k.second - shift, v);
  for (const auto& [k, v] : p.twisted.entries()) {
    auto n = static_cast<std::int64_t>(numerator_of(v));
    if (k.first == 0) p.a += n;
    if (k.first == 1)
      for (std::int64_t c = 0; c < n; ++c) p.j.push_back(k.second);
  }
  std::sort(p.j.begin(), p.j.end());
  return p;
}

const BettiDiagram kV1 = two_row(2, 4, 1, 0, 1, 4, 2);
const BettiDiagram kV2 = two_row(2, 4, 2, 0, 2, 4, 2);
const BettiDiagram kV3 = two_row(2, 4, 3, 1, 3, 5, 2);

}  // namespace

// ---------------------------------------------------------------------------
// Buchsbaum-Rim checks

TEST(SecondSyzygy, DisplayedSum) {
  auto f = second_syzygy_check(second_syzygy_example());
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->kind, FindingKind::SecondSyzygy);
  EXPECT_EQ(f->lhs, 5);
  EXPECT_EQ(f->rhs, 4);
}

TEST(SecondSyzygy, LinearStrandPasses) {
  EXPECT_FALSE(second_syzygy_check(pi_of({0, 1, 2, 4})).has_value());
  EXPECT_THROW(second_syzygy_check(pi_of({0, 3})), NotApplicable);
  EXPECT_THROW(second_syzygy_check(table({{1, 1}, {1, 0}})), NotApplicable);
}

TEST(Codimension, TooFewSyzygies) {
  auto f = codimension_check(d1());
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->kind, FindingKind::CodimTooFew);
  EXPECT_EQ(f->lhs, 2);
  EXPECT_EQ(f->rhs, 3);
}

TEST(Codimension, EqualityCaseMismatch) {
  auto f = codimension_check(codim_equality_example());
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->kind, FindingKind::CodimEqualityMismatch);
  BettiDiagram br = buchsbaum_rim_table(6, std::vector<int>(8, 1));
  EXPECT_EQ(br.at(2, 7), 8);
  EXPECT_EQ(br.at(3, 8), 6);
  EXPECT_NE(br, codim_equality_example());
}

TEST(Codimension, EqualityCaseMatch) {
  EXPECT_EQ(buchsbaum_rim_table(2, {1, 1, 1, 1}), scale(d1(), 2));
  EXPECT_FALSE(codimension_check(scale(d1(), 2)).has_value());
}

TEST(Codimension, OneOneAlphaFamily) {
  // For even alpha the diagram is (a, a+2, a+2, a) with a = alpha - 1, which
  // is the Buchsbaum-Rim table of a generic (alpha-1) x (alpha+1) linear map.
  for (int alpha = 3; alpha <= 9; ++alpha) {
    BettiDiagram d = pi_of({0, 1, alpha, alpha + 1});
    auto f = codimension_check(d);
    if (alpha % 2) {
      ASSERT_TRUE(f.has_value()) << alpha;
      EXPECT_EQ(f->kind, FindingKind::CodimTooFew) << alpha;
    } else {
      EXPECT_FALSE(f.has_value()) << alpha;
      EXPECT_EQ(d, buchsbaum_rim_table(alpha - 1, std::vector<int>(static_cast<std::size_t>(alpha + 1), 1)));
    }
  }
}

TEST(Regularity, TwiceOneFourNineTen) {
  auto f = regularity_check(regularity_example());
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->lhs, 10);
  EXPECT_EQ(f->rhs, 9);
  EXPECT_FALSE(regularity_check(scale(d1(), 2)).has_value());
  EXPECT_THROW(regularity_check(two_row(2, 4, 3, 1, 3, 5, 1)), NotApplicable);
}

TEST(Checks, NeedOneGeneratorDegree) {
  BettiDiagram two_degrees = add(d1(), twist(d1(), 1));
  EXPECT_THROW(second_syzygy_check(two_degrees), NotApplicable);
  EXPECT_THROW(codimension_check(two_degrees), NotApplicable);
  EXPECT_THROW(regularity_check(two_degrees), NotApplicable);
  EXPECT_THROW(codimension_check(BettiDiagram{}), NotApplicable);
  // a twist changes nothing
  EXPECT_EQ(codimension_check(twist(d1(), 3)), codimension_check(d1()));
}

TEST(Independence, IntendedKindOnD) {
  EXPECT_EQ(kinds(on_d(second_syzygy_example())), (std::multiset<std::pair<FindingKind, Side>>{
                                                      {FindingKind::SecondSyzygy, Side::D}}));
  // the remaining three examples trigger a second kind as well
  EXPECT_EQ(kinds(on_d(codim_example())),
            (std::multiset<std::pair<FindingKind, Side>>{{FindingKind::SecondSyzygy, Side::D},
                                                         {FindingKind::CodimTooFew, Side::D}}));
  EXPECT_EQ(kinds(on_d(codim_equality_example())),
            (std::multiset<std::pair<FindingKind, Side>>{{FindingKind::CodimEqualityMismatch, Side::D},
                                                         {FindingKind::Regularity, Side::D}}));
  EXPECT_EQ(kinds(on_d(regularity_example())),
            (std::multiset<std::pair<FindingKind, Side>>{{FindingKind::Regularity, Side::D}}));
}

TEST(Independence, OneOneThreeFourSecondSyzygyIsGenuine) {
  // a = 1, j = (1, 1): the bound is 2 but beta_2 sits in degree 3
  Presentation p = presentation(d1());
  EXPECT_EQ(p.a, 1);
  EXPECT_EQ(p.j, (std::vector<int>{1, 1}));
  EXPECT_EQ(min_degree(d1(), 2), 3);
}

TEST(Independence, ZeroOneSixTenRegularityIsGenuine) {
  // equality case: e + a - 1 = 8 = b, so the bound sums all eight j's
  Presentation p = presentation(codim_equality_example());
  EXPECT_EQ(p.a, 6);
  EXPECT_EQ(p.j.size(), 8u);
  EXPECT_EQ(max_degree(codim_equality_example(), 3), 10);
}

TEST(BuchsbaumRim, SmallTables) {
  EXPECT_EQ(buchsbaum_rim_table(1, {1, 1}), pi_of({0, 1, 2}));
  EXPECT_THROW(buchsbaum_rim_table(2, {1, 1}), std::invalid_argument);
  EXPECT_THROW(buchsbaum_rim_table(0, {1}), std::invalid_argument);
}

TEST(BuchsbaumRim, KoszulWhenOneGenerator) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t b = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    std::vector<int> j(b);
    for (auto& x : j) x = std::uniform_int_distribution<int>(1, 4)(rng);
    BettiDiagram want;
    for (std::uint32_t mask = 0; mask < (1u << b); ++mask) {
      int s = 0, size = 0;
      for (std::size_t k = 0; k < b; ++k)
        if (mask >> k & 1) {
          s += j[k];
          ++size;
        }
      want.set(size, s, want.at(size, s) + 1);
    }
    EXPECT_EQ(buchsbaum_rim_table(1, j), want);
  }
}

TEST(BuchsbaumRim, ShapeAndHerzogKuhl) {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    std::int64_t a = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
    std::size_t b = static_cast<std::size_t>(a) + std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::vector<int> j(b);
    for (auto& x : j) x = std::uniform_int_distribution<int>(1, 3)(rng);
    BettiDiagram t = buchsbaum_rim_table(a, j);
    int e = static_cast<int>(b) - static_cast<int>(a) + 1;
    EXPECT_EQ(pdim(t), e);
    EXPECT_TRUE(is_cohen_macaulay(t));
    EXPECT_EQ(codimension(t), e);
    // column totals C(a+i-3, i-2) C(b, a+i-1)
    for (int i = 2; i <= e; ++i)
      EXPECT_EQ(column_total(t, i), Rational(binomial(a + i - 3, i - 2) * binomial(static_cast<std::int64_t>(b), a + i - 1)));
  }
}

// ---------------------------------------------------------------------------
// Two rows, codimension three

TEST(RankBounds, ExampleDiagrams) {
  auto r = infer_rank_bounds(d2(), true);
  EXPECT_EQ(r.tau_min, 2);
  EXPECT_EQ(r.mu_min, 2);
  r = infer_rank_bounds(d_prime(), true);
  EXPECT_EQ(r.tau_min, 3);
  EXPECT_EQ(r.mu_min, 3);
  r = infer_rank_bounds(d_double_prime(), true);
  EXPECT_EQ(r.tau_min, 2);
  EXPECT_EQ(r.mu_min, 3);
  r = infer_rank_bounds(d_prime(), false);
  EXPECT_EQ(r.tau_min, 2);
}

TEST(RankBounds, EliminationRules) {
  EXPECT_EQ(detail::rank_lower_bound(1, 5, true), 1);
  EXPECT_EQ(detail::rank_lower_bound(2, 2, true), 2);
  EXPECT_EQ(detail::rank_lower_bound(3, 2, false), 1);
  EXPECT_EQ(detail::rank_lower_bound(3, 0, true), 0);
  // D': every rank-2 shape of a 3 x 6 block is ruled out
  for (std::int64_t s = 0; s <= 2; ++s) EXPECT_TRUE(detail::compression_shape_infeasible(3, 6, 2, s));
  EXPECT_TRUE(detail::compression_shape_infeasible(3, 6, 3, 1));
  EXPECT_FALSE(detail::compression_shape_infeasible(3, 6, 3, 2));
  // never more than kMaxEliminatedRank ranks are eliminated
  EXPECT_LE(detail::rank_lower_bound(10, 40, true), kMaxEliminatedRank + 1);
}

TEST(RankBounds, WrongShape) {
  EXPECT_THROW(infer_rank_bounds(regularity_example(), true), NotApplicable);
  EXPECT_THROW(infer_rank_bounds(scale(d1(), Rational(1, 2)), true), NotApplicable);
  EXPECT_THROW(infer_rank_bounds(kV3, true), NotApplicable);
  EXPECT_THROW(two_row_shape(regularity_example()), NotApplicable);
}

TEST(MaximalMinor, Examples) {
  auto f = maximal_minor_check(d2(), infer_rank_bounds(d2(), true));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->lhs, 5);
  EXPECT_EQ(f->rhs, 4);
  f = maximal_minor_check(d_prime(), infer_rank_bounds(d_prime(), true));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->lhs, 7);
  EXPECT_EQ(f->rhs, 6);
  f = maximal_minor_check(d_double_prime(), infer_rank_bounds(d_double_prime(), true));
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->lhs, 8);
  EXPECT_EQ(f->rhs, 7);
  RankBounds three{3, 3, true, false};
  EXPECT_FALSE(maximal_minor_check(scale(d2(), 2), three).has_value());
  EXPECT_THROW(maximal_minor_check(kV3, three), NotApplicable);
}

TEST(MaximalMinor, EquivalentForm) {
  // b' - a + t + u <= c'  iff  c - d' + t + u <= b, given c' + c - d' = b + b' - a
  for (const auto& d : {d2(), d_prime(), d_double_prime(), kV1, kV2}) {
    TwoRowShape s = two_row_shape(d);
    EXPECT_EQ(s.c2 + s.c - s.d2, s.b + s.b2 - s.a);
    RankBounds r = infer_rank_bounds(d, true);
    bool first = s.b2 - s.a + r.tau_min + r.mu_min > s.c2;
    bool second = s.c - s.d2 + r.tau_min + r.mu_min > s.b;
    EXPECT_EQ(first, second);
    EXPECT_EQ(maximal_minor_check(d, r).has_value(), first);
  }
}

TEST(EAlpha, Family) {
  EXPECT_EQ(e_alpha(0), d_double_prime());
  EXPECT_EQ(e_alpha(5), two_row(7, 3, 2, 0, 35, 47, 18));
  for (int alpha = 0; alpha <= 20; ++alpha) {
    auto f = e_alpha_check(e_alpha(alpha));
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(f->lhs, alpha);
    EXPECT_FALSE(e_alpha_check(scale(e_alpha(alpha), 3)).has_value());
    EXPECT_TRUE(e_alpha_check(twist(e_alpha(alpha), 2)).has_value());
  }
  EXPECT_FALSE(e_alpha_check(d2()).has_value());
  EXPECT_FALSE(e_alpha_check(BettiDiagram{}).has_value());
  EXPECT_THROW(e_alpha(-1), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Split search

TEST(SplitSearch, TwiceDFindsTheModuleSplit) {
  SplitResult r = split_search(scale(d2(), 2), obstructed_if_indecomposable);
  EXPECT_EQ(r.verdict, SplitVerdict::UnresolvedSplitExists);
  EXPECT_FALSE(r.cap_exceeded);
  ASSERT_FALSE(r.unresolved.empty());
  std::set<BettiDiagram::Map> pair{r.unresolved[0].first.entries(), r.unresolved[0].second.entries()};
  EXPECT_EQ(pair, (std::set<BettiDiagram::Map>{pi_of({0, 1, 2, 4}).entries(), pi_of({0, 2, 3, 4}).entries()}));
}

TEST(SplitSearch, DHasNoLatticeSplit) {
  SplitResult r = split_search(d2(), obstructed_if_indecomposable);
  EXPECT_EQ(r.verdict, SplitVerdict::AllSplitsObstructed);
  detail::SplitSearch s(obstructed_if_indecomposable, kDefaultSplitCap);
  auto parts = s.summands(d2());
  ASSERT_TRUE(parts.has_value());
  EXPECT_TRUE(parts->empty());
  EXPECT_TRUE(oracle::full_box_summands(d2()).empty());
}

TEST(SplitSearch, PureLeaf) {
  EXPECT_EQ(split_search(d1(), leaf_codimension).verdict, SplitVerdict::AllSplitsObstructed);
  SplitResult r = split_search(scale(d1(), 2), leaf_codimension);
  EXPECT_TRUE(r.leaf_unobstructed);
  EXPECT_EQ(r.verdict, SplitVerdict::UnresolvedSplitExists);
}

TEST(SplitSearch, AgreesWithFullBox) {
  for (const auto& [d, leaf] : std::vector<std::pair<BettiDiagram, LeafTest>>{
           {d2(), obstructed_if_indecomposable},
           {scale(d2(), 2), obstructed_if_indecomposable},
           {d1(), leaf_codimension},
           {scale(d1(), 2), leaf_codimension},
           {d_double_prime(), obstructed_if_indecomposable}}) {
    std::map<BettiDiagram::Map, bool> memo;
    bool want = oracle::certified_full_box(d, leaf, memo);
    EXPECT_EQ(split_search(d, leaf).verdict == SplitVerdict::AllSplitsObstructed, want) << format_diagram(d);
  }
}

TEST(SplitSearch, CapNeverCertifies) {
  SplitResult r = split_search(scale(d2(), 2), obstructed_if_indecomposable, 3);
  EXPECT_TRUE(r.cap_exceeded);
  EXPECT_EQ(r.verdict, SplitVerdict::UnresolvedSplitExists);
  EXPECT_EQ(split_search(scale(d2(), 2), obstructed_if_indecomposable, 1).verdict,
            SplitVerdict::UnresolvedSplitExists);
  // no split at all: the leaf decides
  EXPECT_EQ(split_search(d2(), [](const BettiDiagram&) { return true; }).verdict, SplitVerdict::AllSplitsObstructed);
}

TEST(SplitSearch, ExampleGeneratorsNeverCertified) {
  Chain c = parse_chain("(0)>(0,3)>(0,3,4)>(0,2,4)>(0,1,4)");
  GeneratorSet g = semigroup_generators(c, DegreeWindow({0, 1, 4}, {0, 3, 4}));
  for (const auto& x : g.generators) {
    EXPECT_NE(split_search(x.diagram, obstructed_if_indecomposable).verdict, SplitVerdict::AllSplitsObstructed)
        << format_diagram(x.diagram);
    EXPECT_EQ(battery(x.diagram).verdict(), Verdict::NoObstructionFound) << format_diagram(x.diagram);
  }
}

// ---------------------------------------------------------------------------
// Battery

TEST(Battery, RayOfOneOneThreeFour) {
  ObstructionReport r = battery(d1());
  EXPECT_EQ(r.verdict(), Verdict::Obstructed);
  EXPECT_TRUE(r.has(FindingKind::CodimTooFew));
  EXPECT_EQ(battery(scale(d1(), 2)).verdict(), Verdict::NoObstructionFound);
  EXPECT_EQ(battery(scale(d1(), 3)).verdict(), Verdict::NoObstructionFound);
}

TEST(Battery, MaximalMinorDiagrams) {
  for (const auto& d : {d2(), d_prime(), d_double_prime()}) {
    ObstructionReport r = battery(d);
    EXPECT_EQ(r.verdict(), Verdict::Obstructed) << format_diagram(d);
    EXPECT_TRUE(r.has(FindingKind::MaximalMinor)) << format_diagram(d);
    EXPECT_TRUE(buchsbaum_rim_findings(d).empty()) << format_diagram(d);
  }
  for (const auto& d : {scale(d2(), 2), kV1, kV2, kV3, scale(d2(), 3)})
    EXPECT_EQ(battery(d).verdict(), Verdict::NoObstructionFound) << format_diagram(d);
}

TEST(Battery, SplitSearchDisabledOnlyNotes) {
  BatteryOptions opt;
  opt.split_search = false;
  ObstructionReport r = battery(d2(), opt);
  EXPECT_EQ(r.verdict(), Verdict::NoObstructionFound);
  EXPECT_FALSE(r.notes.empty());
  // E_alpha needs no split search
  EXPECT_EQ(battery(e_alpha(4), opt).verdict(), Verdict::Obstructed);
}

TEST(Battery, EAlphaFamilyIsObstructedLatticePoints) {
  for (int alpha = 0; alpha <= 20; ++alpha) {
    EXPECT_TRUE(in_lattice(e_alpha(alpha)));
    EXPECT_EQ(battery(e_alpha(alpha)).verdict(), Verdict::Obstructed) << alpha;
  }
}

TEST(Battery, PrimeFamilyThreshold) {
  for (int p : {2, 3, 5}) {
    BettiDiagram base = prime_family(p, 1);
    EXPECT_TRUE(is_integral(base));
    EXPECT_EQ(base.at(1, 1), 2);
    for (int c = 1; c < p; ++c) {
      ObstructionReport r = battery(prime_family(p, c));
      EXPECT_EQ(r.verdict(), Verdict::Obstructed) << p << " " << c;
      EXPECT_TRUE(r.has(FindingKind::CodimTooFew) || r.has(FindingKind::CodimEqualityMismatch)) << p << " " << c;
    }
    EXPECT_EQ(battery(prime_family(p, p)).verdict(), Verdict::NoObstructionFound) << p;
  }
}

TEST(Battery, DualitySymmetry) {
  std::vector<BettiDiagram> fixtures{d1(),     scale(d1(), 2),          d2(),
                                     d_prime(), regularity_example(),   codim_equality_example(),
                                     kV1,      prime_family(3, 1),      pi_of({0, 2, 5, 6}),
                                     e_alpha(2)};
  for (const auto& d : fixtures) {
    ASSERT_TRUE(is_cohen_macaulay(d));
    EXPECT_EQ(battery(d).verdict(), battery(dual(d)).verdict()) << format_diagram(d);
    std::multiset<std::pair<FindingKind, Side>> mine, theirs;
    for (const auto& f : buchsbaum_rim_findings(d)) mine.insert({f.kind, f.side});
    for (const auto& f : buchsbaum_rim_findings(dual(d)))
      theirs.insert({f.kind, f.side == Side::D ? Side::Dual : Side::D});
    EXPECT_EQ(mine, theirs) << format_diagram(d);
  }
}

TEST(Battery, WitnessesReevaluate) {
  std::vector<BettiDiagram> fixtures{second_syzygy_example(), d1(), codim_equality_example(), regularity_example(),
                                     prime_family(5, 2), pi_of({0, 1, 5, 6})};
  for (const auto& d : fixtures) {
    for (const auto& f : battery(d).findings) {
      BettiDiagram target = f.side == Side::D ? d : dual(d);
      Presentation p = presentation(target);
      int e = codimension(p.twisted);
      auto b = static_cast<std::int64_t>(p.j.size());
      switch (f.kind) {
        case FindingKind::SecondSyzygy: {
          int bound = 0;
          for (std::int64_t l = 0; l <= p.a; ++l) bound += p.j[static_cast<std::size_t>(l)];
          EXPECT_EQ(f.lhs, min_degree(p.twisted, 2));
          EXPECT_EQ(f.rhs, bound);
          EXPECT_GT(f.lhs, f.rhs);
          break;
        }
        case FindingKind::CodimTooFew:
          EXPECT_EQ(f.lhs, b);
          EXPECT_EQ(f.rhs, e + p.a - 1);
          EXPECT_LT(f.lhs, f.rhs);
          break;
        case FindingKind::CodimEqualityMismatch:
          EXPECT_EQ(b, e + p.a - 1);
          EXPECT_NE(f.lhs, f.rhs);
          EXPECT_NE(p.twisted, buchsbaum_rim_table(p.a, p.j));
          break;
        case FindingKind::Regularity: {
          int bound = 0;
          for (std::int64_t l = b - (e + p.a - 1); l < b; ++l) bound += p.j[static_cast<std::size_t>(l)];
          EXPECT_EQ(f.lhs, max_degree(p.twisted, e));
          EXPECT_EQ(f.rhs, bound);
          EXPECT_GT(f.lhs, f.rhs);
          break;
        }
        default:
          ADD_FAILURE() << "unexpected kind " << to_string(f.kind);
      }
    }
  }
}

TEST(Battery, NonIntegralDiagramsAreSkipped) {
  ObstructionReport r = battery(scale(pi_of({0, 1, 2, 4}), Rational(1, 2)));
  EXPECT_EQ(r.verdict(), Verdict::NoObstructionFound);
  EXPECT_FALSE(r.notes.empty());
  EXPECT_EQ(battery(BettiDiagram{}).verdict(), Verdict::NoObstructionFound);
}

// ---------------------------------------------------------------------------
// Deciders

TEST(Pd1, Examples) {
  BettiDiagram d;
  d.set(0, 0, 2);
  d.set(0, 1, 1);
  d.set(1, 1, 2);
  d.set(1, 3, 1);
  Pd1Verdict v = pd1_decide(d);
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.decomposition.sum(), d);
  std::map<DegreeSequence, Rational> got;
  for (const auto& t : v.decomposition.terms) got[t.degrees] = t.coefficient;
  EXPECT_EQ(got, (std::map<DegreeSequence, Rational>{{seq({0, 1}), 2}, {seq({1, 3}), 1}}));
  EXPECT_TRUE(pd1_decide(pi_of({0, 1})).member);
  EXPECT_FALSE(pd1_decide(table({{2, 1}})).member);
  EXPECT_THROW(pd1_decide(d1()), NotApplicable);
}

TEST(Pd1, ExhaustiveAgainstMatching) {
  std::vector<std::vector<int>> multisets{{}};
  for (int size = 1; size <= 3; ++size) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
      if (static_cast<int>(cur.size()) == size) {
        multisets.push_back(cur);
        return;
      }
      for (int v = from; v <= 5; ++v) {
        cur.push_back(v);
        rec(v);
        cur.pop_back();
      }
    };
    rec(0);
  }
  int members = 0;
  for (const auto& alpha : multisets) {
    if (alpha.empty()) continue;
    for (const auto& gamma : multisets) {
      BettiDiagram d;
      for (int x : alpha) d.set(0, x, d.at(0, x) + 1);
      for (int x : gamma) d.set(1, x, d.at(1, x) + 1);
      Pd1Verdict v = pd1_decide(d);
      ASSERT_EQ(v.member, oracle::matchable(alpha, gamma)) << format_diagram(d);
      if (v.member) {
        ++members;
        EXPECT_EQ(v.decomposition.sum(), d);
        EXPECT_TRUE(in_lattice(d));
      } else {
        EXPECT_FALSE(v.reason.empty());
      }
    }
  }
  EXPECT_GT(members, 0);
}

TEST(Level, ConcavityHelper) {
  EXPECT_EQ(first_concavity_violation(HilbertFunction{0, {1, 1, 2}}, 1, 1), 1);
  EXPECT_FALSE(first_concavity_violation(HilbertFunction{0, {1, 3, 5}}, 1, 1).has_value());
}

TEST(Level, Examples) {
  LevelVerdict v = level_decide(pi_of({0, 2, 3}));
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.hilbert.at(0), 1);
  EXPECT_EQ(v.hilbert.at(1), 2);
  EXPECT_TRUE(level_decide(table({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}})).member);
  EXPECT_THROW(level_decide(d1()), NotApplicable);
  EXPECT_THROW(level_decide(table({{1, 1, 1}, {0, 1, 1}})), NotApplicable);
}

TEST(Level, ScalingInvariantAndMatchesSeries) {
  std::mt19937 rng(23);
  int checked = 0;
  while (checked < 200) {
    int top = std::uniform_int_distribution<int>(2, 6)(rng);
    BettiDiagram d;
    d.set(0, 0, std::uniform_int_distribution<int>(1, 4)(rng));
    for (int j = 1; j < top; ++j) {
      int x = std::uniform_int_distribution<int>(0, 3)(rng);
      if (x) d.set(1, j, x);
    }
    // beta_2 from the two Herzog-Kuhl equations when they close up
    Rational chi = d.at(0, 0) - syzygy_count(d);
    if (chi >= 0) continue;
    d.set(2, top, -chi);
    if (!is_cohen_macaulay(d)) continue;
    ++checked;
    LevelVerdict v = level_decide(d);
    auto series = oracle::hilbert_by_series(d, 2, top);
    std::optional<int> want;
    for (int i = 1; i <= top - 2 && !want; ++i) {
      auto k = static_cast<std::size_t>(i);
      if (series[k - 1] - 2 * series[k] + series[k + 1] > 0) want = i;
    }
    EXPECT_EQ(v.failing_index, want) << format_diagram(d);
    for (int c = 2; c <= 4; ++c) EXPECT_EQ(level_decide(scale(d, c)).member, v.member);
  }
}

TEST(Level, ExampleGeneratorsPass) {
  Chain c = parse_chain("(0)>(0,3)>(0,3,4)>(0,2,4)>(0,1,4)");
  GeneratorSet g = semigroup_generators(c, DegreeWindow({0, 1, 4}, {0, 3, 4}));
  int applicable = 0;
  for (const auto& x : g.generators) {
    try {
      LevelVerdict v = level_decide(x.diagram);
      ++applicable;
      EXPECT_TRUE(v.member) << format_diagram(x.diagram);
      for (int k = 2; k <= 5; ++k) EXPECT_TRUE(level_decide(scale(x.diagram, k)).member);
    } catch (const NotApplicable&) {
    }
  }
  EXPECT_GT(applicable, 0);
}

// ---------------------------------------------------------------------------
// Recorded facts

TEST(Facts, Registry) {
  EXPECT_EQ(d2_diagram(), d2());
  auto two = lookup_fact(scale(d2(), 2));
  ASSERT_TRUE(two.has_value());
  EXPECT_TRUE(two->in_module_semigroup);
  auto three = lookup_fact(scale(d2(), 3));
  ASSERT_TRUE(three.has_value());
  EXPECT_FALSE(three->in_module_semigroup);
  EXPECT_FALSE(lookup_fact(d2()).has_value());
  // the registry is not a verdict: the battery finds nothing on 3 D
  EXPECT_EQ(battery(scale(d2(), 3)).verdict(), Verdict::NoObstructionFound);
}
