#include "curveatlas/classifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "curveatlas/solvers.hpp"

namespace curveatlas {

namespace {

std::string num(i64 v) { return std::to_string(v); }

// (a; head..., 2^twos, 1^ones) builder for the plane-model families
std::vector<i64> multiplicities(std::vector<i64> head, i64 twos, i64 ones) {
  std::vector<i64> b = std::move(head);
  b.insert(b.end(), static_cast<std::size_t>(twos), 2);
  b.insert(b.end(), static_cast<std::size_t>(ones), 1);
  return b;
}

Witness scroll_witness(i64 n, i64 a, i64 b, std::string citation) {
  Witness w{WitnessKind::ExtremalOnScroll, {}, std::move(citation)};
  w.params["n"] = num(n);
  w.params["a"] = num(a);
  w.params["b"] = num(b);
  return w;
}

Witness plane_witness(i64 a, std::vector<i64> b, i64 embed_a, std::vector<i64> embed_b,
                      std::string citation) {
  Witness w{WitnessKind::BlownPlaneSystem, {}, std::move(citation)};
  w.params["class"] = format_blowup_class(blowup_class(a, b));
  w.params["embedding"] = format_blowup_class(blowup_class(embed_a, embed_b));
  w.params["s"] = num(static_cast<i64>(b.size()));
  return w;
}

Witness bn_witness(i64 d, i64 g, i64 r) {
  Witness w{WitnessKind::BrillNoetherGeneral, {},
            "general curve in the Brill-Noether range carries a complete very ample g^r_d"};
  w.params["rho"] = num(rho(d, g, r));
  return w;
}

Witness triple_cover_witness(i64 alpha) {
  Witness w{WitnessKind::TripleCoverElliptic, {},
            "residual of the pullback of a degree-(alpha) elliptic series under a triple cover"};
  w.params["alpha"] = num(alpha);
  return w;
}

Verdict empty_verdict(i64 r, i64 g, i64 alpha, Obstruction obs) {
  return Verdict{CurveTriple{g + r - alpha, g, r}, Status::Empty, std::nullopt, std::move(obs)};
}

Verdict nonempty_verdict(i64 r, i64 g, i64 alpha, Witness w) {
  return Verdict{CurveTriple{g + r - alpha, g, r}, Status::NonEmpty, std::move(w), std::nullopt};
}

Verdict unknown_verdict(i64 r, i64 g, i64 alpha) {
  return Verdict{CurveTriple{g + r - alpha, g, r}, Status::Unknown, std::nullopt, std::nullopt};
}

Obstruction genus_obstruction(i64 d, i64 r, i64 g) {
  Obstruction o{{ObstructionKind::GenusExceedsPi},
                {},
                "Castelnuovo bound: the genus exceeds the maximum for an irreducible "
                "nondegenerate curve of this degree"};
  o.params["g"] = num(g);
  if (d >= r && r >= 2) {
    o.params["pi"] = num(pi_bound(d, r));
  } else {
    o.params["note"] = "degenerate: d < r";
  }
  return o;
}

Obstruction compound_obstruction(i64 e, i64 g) {
  Obstruction o{{ObstructionKind::CompoundResidual},
                {},
                "the residual series must be compounded; no compounded case carries a very "
                "ample residual"};
  o.params["e"] = num(e);
  std::string cases;
  bool hyperelliptic = false;
  for (const auto& c : compound_obstruction_cases(e, g)) {
    if (!cases.empty()) cases += ' ';
    cases += '(' + num(c[0]) + ',' + num(c[1]) + ',' + num(c[2]) + ')';
    hyperelliptic = hyperelliptic || (c[0] == 2 && c[1] == 4);
  }
  o.params["cases"] = cases;
  // the (2,4,*) case is a double cover of a rational quartic: hyperelliptic,
  // eliminated because such curves carry no special very ample series
  if (hyperelliptic) o.kinds.push_back(ObstructionKind::HyperellipticNoSpecialVA);
  return o;
}

std::vector<i64> rep(i64 value, i64 count) {
  return std::vector<i64>(static_cast<std::size_t>(count), value);
}

}  // namespace

bool Obstruction::has(ObstructionKind k) const {
  return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

std::vector<std::array<i64, 3>> compound_obstruction_cases(i64 e, i64 /*genus_bound*/) {
  if (e < 5) throw std::invalid_argument("compound_obstruction_cases: e must be >= 5");
  std::vector<std::array<i64, 3>> out;
  for (i64 k = 2; 4 * k <= e; ++k)
    for (i64 f = e / k; f >= 4; --f) out.push_back({k, f, e - k * f});
  return out;
}

std::optional<Witness> gonal_witness(i64 alpha, i64 r, i64 g) {
  if (alpha < 3) throw std::invalid_argument("gonal_witness: alpha must be >= 3");
  const i64 e = g - r + alpha - 2;
  if (e < 0) return std::nullopt;
  const i64 sigma = e % (alpha - 1);
  const i64 k = (e - sigma) / (alpha - 1);
  const i64 m = sigma + 2;
  const i64 n = alpha - 1;
  if (k < 4) return std::nullopt;
  if (2 * k - g - 2 >= 0) return std::nullopt;
  if (g < 2 * m + n * (k - 1)) return std::nullopt;
  Witness w{WitnessKind::GonalResidual, {},
            "residual of (alpha-1) multiples of the gonality pencil plus a general divisor "
            "on a general k-gonal curve"};
  w.params["k"] = num(k);
  w.params["sigma"] = num(sigma);
  w.params["m"] = num(m);
  w.params["n"] = num(n);
  w.params["e"] = num(e);
  return w;
}

Verdict classify_alpha5(i64 r, i64 g) {
  if (r < 3) throw std::invalid_argument("classify_alpha5: r must be >= 3");
  const i64 alpha = 5;
  const i64 d = g + r - alpha;

  if (g <= r + 8) {
    if (r == 4 && g == 12)
      return nonempty_verdict(r, g, alpha,
                              scroll_witness(3, 4, -1, "extremal curve |4H-L| on the cubic scroll"));
    if (r == 3 && g == 11) {
      Obstruction o{{ObstructionKind::GenusExceedsPi, ObstructionKind::NoIntegerSolutions},
                    {},
                    "a nearly extremal curve here must be of type (a,b) on a quadric, and "
                    "a+b=9, (a-1)(b-1)=11 has no solution"};
      o.params["pi1"] = num(pi1_bound(9, 3));
      o.params["pi"] = num(pi_bound(9, 3));
      o.params["g"] = num(g);
      return empty_verdict(r, g, alpha, std::move(o));
    }
    return empty_verdict(r, g, alpha, genus_obstruction(d, r, g));
  }

  if (g == r + 9) {
    if (r == 3)
      return nonempty_verdict(r, g, alpha, [] {
        Witness w{WitnessKind::QuadricType, {}, "smooth curve of type (3,7) on a quadric"};
        w.params["a"] = "3";
        w.params["b"] = "7";
        return w;
      }());
    if (r == 4)
      return nonempty_verdict(r, g, alpha,
                              scroll_witness(3, 3, 3, "trigonal curve |3H+3L| on the cubic scroll"));
    if (r == 5)
      return nonempty_verdict(r, g, alpha,
                              scroll_witness(4, 3, 2, "trigonal curve |3H+2L| on the quartic scroll"));
    return nonempty_verdict(
        r, g, alpha, scroll_witness(r - 1, 3, 7 - r, "extremal curve on a minimal-degree scroll"));
  }

  if (g == r + 10) {
    if (r <= 8)
      return nonempty_verdict(r, g, alpha,
                              plane_witness(8, multiplicities({3}, 8 - r, 0), 3, rep(1, 9 - r),
                                            "octic plane model on the anticanonical P2_(9-r)"));
    return empty_verdict(r, g, alpha, compound_obstruction(13, g));
  }

  if (g == r + 11) {
    if (r <= 7)
      return nonempty_verdict(r, g, alpha,
                              plane_witness(8, multiplicities({3}, 7 - r, 1), 3, rep(1, 9 - r),
                                            "octic plane model on the anticanonical P2_(9-r)"));
    if (r <= 11)
      return nonempty_verdict(
          r, g, alpha,
          plane_witness(9, multiplicities({4}, 11 - r, 0), 4, multiplicities({2}, 0, 11 - r),
                        "nonic plane model on P2_(12-r) embedded by (4;2,1^(11-r))"));
    return empty_verdict(r, g, alpha, compound_obstruction(14, g));
  }

  if (g == r + 12) {
    if (r <= 6)
      return nonempty_verdict(r, g, alpha,
                              plane_witness(8, multiplicities({3}, 6 - r, 2), 3, rep(1, 9 - r),
                                            "octic plane model on the anticanonical P2_(9-r)"));
    if (r <= 10)
      return nonempty_verdict(
          r, g, alpha,
          plane_witness(9, multiplicities({4}, 10 - r, 1), 4, multiplicities({2}, 0, 11 - r),
                        "nonic plane model on P2_(12-r) embedded by (4;2,1^(11-r))"));
    return nonempty_verdict(r, g, alpha, triple_cover_witness(alpha));
  }

  // g >= r + 13
  if (rho(d, g, r) >= 0) return nonempty_verdict(r, g, alpha, bn_witness(d, g, r));
  if (r == 3) {
    if (g <= 18)
      return nonempty_verdict(r, g, alpha,
                              plane_witness(8, multiplicities({3}, 5 - (g - 13), g - 13), 3,
                                            rep(1, 6), "octic plane model on the cubic surface"));
    // g == 19 (rho >= 0 covers g >= 20)
    return nonempty_verdict(r, g, alpha,
                            plane_witness(10, multiplicities({6}, 2, 3), 3, rep(1, 6),
                                          "decic plane model on the cubic surface"));
  }
  if (r == 4) {
    const i64 delta = 25 - g;  // 17 <= g <= 24
    return nonempty_verdict(r, g, alpha,
                            plane_witness(9, multiplicities({3}, delta, 9 - delta), 4, rep(1, 10),
                                          "nonic plane model on the Bordiga surface in P4"));
  }
  if (r == 5) {
    if (g <= 21) {
      const i64 delta = 22 - g;
      return nonempty_verdict(
          r, g, alpha,
          plane_witness(10, multiplicities({3, 3, 3, 3, 3}, delta - 1, 5 - delta), 4, rep(1, 9),
                        "decic plane model on the Bordiga surface in P5"));
    }
    if (g <= 25) {
      const i64 delta = g - 21;
      return nonempty_verdict(
          r, g, alpha,
          plane_witness(12, multiplicities({6, 4, 3, 3, 3}, 4 - delta, delta), 4, rep(1, 9),
                        "degree-12 plane model on the Bordiga surface in P5"));
    }
    const i64 delta = g - 25;  // 26 <= g <= 29
    return nonempty_verdict(
        r, g, alpha,
        plane_witness(14, multiplicities({8, 4, 4, 4, 3}, 4 - delta, delta), 4, rep(1, 9),
                      "degree-14 plane model on the Bordiga surface in P5"));
  }
  const auto gw = gonal_witness(alpha, r, g);
  if (!gw) throw std::logic_error("gonal witness unexpectedly missing for g >= r+13, r >= 6");
  return nonempty_verdict(r, g, alpha, *gw);
}

IrreducibilityStatus irreducibility_alpha5(i64 r, i64 g) {
  if (r < 3) throw std::invalid_argument("irreducibility_alpha5: r must be >= 3");
  if (classify_alpha5(r, g).status == Status::Empty)
    return {Irreducibility::Empty, std::nullopt, "mirrors the existence table"};

  if (r == 4 && g == 12)
    return {Irreducibility::Irreducible, std::nullopt,
            "unique scroll class (4,-1); one Severi component"};

  const i64 row = g - r;
  if (row == 9) {
    switch (r) {
      case 3:
        return {Irreducibility::Reducible, 2,
                "quadric-type and cubic-surface families of equal dimension 40"};
      case 4:
        return {Irreducibility::Reducible, 2,
                "trigonal scroll family (dim 51) and semi-canonical del Pezzo family (dim 50)"};
      case 5: {
        // the Veronese branch of the minimal-degree surfaces cannot carry
        // this curve: degree 14 forces plane genus 15 != 14
        const auto vg = veronese_plane_genus(g + r - 5);
        if (vg && *vg == g) throw std::logic_error("unexpected Veronese family at (5, r+9)");
        return {Irreducibility::Irreducible, std::nullopt,
                "single trigonal family |3H+2L| on the quartic scroll; the Veronese branch "
                "fails the genus check"};
      }
      case 6:
        return {Irreducibility::Reducible, 2, "two scroll classes (3,1) and (4,-4)"};
      default:
        return {Irreducibility::Irreducible, std::nullopt,
                "unique scroll class (3,7-r); one Severi component"};
    }
  }
  if (row == 10) {
    switch (r) {
      case 3:
        return {Irreducibility::Irreducible, std::nullopt,
                "liaison to elliptic quintics in pencils of quartics; expected dimension 44"};
      case 4:
        return {Irreducibility::ExpectedDimComponentOnly, std::nullopt,
                "generically reduced component of the expected dimension 52; "
                "full component list open"};
      case 5:
        return {Irreducibility::Irreducible, std::nullopt,
                "known irreducibility of the (15,15,5) scheme"};
      case 6:
      case 7:
        return {Irreducibility::Irreducible, std::nullopt,
                "only the |5H-2L| Severi family has a very ample residual"};
      default:  // r == 8
        return {Irreducibility::Reducible, 2,
                "two smooth scroll classes |5H-2L| and |4H+L| (dims 32, 33)"};
    }
  }
  if (row == 11) {
    if (r <= 6) return {Irreducibility::Unknown, std::nullopt, ""};
    switch (r) {
      case 7:
        return {Irreducibility::Reducible, std::nullopt,
                "del Pezzo family is a component (dim 33) distinct from the nodal scroll "
                "family (dim 34)"};
      case 8:
      case 9:
        return {Irreducibility::Irreducible, std::nullopt,
                "only the |5H-L| Severi family has a very ample residual"};
      case 10:
        return {Irreducibility::Reducible, 2,
                "components over Sigma_{|5H-L|,1} (dim 37) and Sigma_{|4H+2L|,0} (dim 38)"};
      default:  // r == 11
        return {Irreducibility::Irreducible, std::nullopt,
                "unique class |5H-L| with very ample residual"};
    }
  }
  if (row == 12) {
    if (r <= 8) return {Irreducibility::Unknown, std::nullopt, ""};
    if (r <= 14)
      return {Irreducibility::Reducible, std::nullopt,
              "nodal scroll family (dim 30+r) plus elliptic-triple-cover families (dim 2r+23)"};
    return {Irreducibility::MatchesHurwitz31, std::nullopt,
            "components in bijection with components of the Hurwitz space X_{3,1}"};
  }
  return {Irreducibility::Unknown, std::nullopt, ""};
}

Verdict classify_general_rules(i64 alpha, i64 r, i64 g) {
  if (alpha < 3) throw std::invalid_argument("classify_general: alpha must be >= 3");
  if (r < 3) throw std::invalid_argument("classify_general: r must be >= 3");
  if (g < 0) throw std::invalid_argument("classify_general: g must be >= 0");
  const i64 d = g + r - alpha;

  // (1) below the extremal genus the dimension bound for birationally very
  // ample series forbids the curve; the threshold switches branch at d = g
  if ((r >= alpha && g <= r + 2 * alpha - 2) || (r < alpha && g <= 2 * r + alpha - 2))
    return empty_verdict(r, g, alpha, genus_obstruction(d, r, g));

  // (2) extremal row: curve on a minimal-degree scroll
  if (r >= alpha + 1 && g == r + 2 * alpha - 1)
    return nonempty_verdict(
        r, g, alpha,
        scroll_witness(r - 1, 3, alpha - r + 2, "extremal curve on a minimal-degree scroll"));

  // (3) Brill-Noether range
  if (rho(d, g, r) >= 0) return nonempty_verdict(r, g, alpha, bn_witness(d, g, r));

  // (4) compounded-residual emptiness rows (stated for alpha >= 5)
  if (alpha >= 5) {
    if (g == r + 2 * alpha && r >= alpha + 4)
      return empty_verdict(r, g, alpha, compound_obstruction(g - r + alpha - 2, g));
    if (g == r + 2 * alpha + 1 && r >= std::max<i64>(alpha + 6, 12))
      return empty_verdict(r, g, alpha, compound_obstruction(g - r + alpha - 2, g));
  }

  // (5) elliptic triple covers
  if (g == r + 2 * alpha + 2 && r >= alpha + 5)
    return nonempty_verdict(r, g, alpha, triple_cover_witness(alpha));

  // (6) gonality-pencil residuals
  if (auto w = gonal_witness(alpha, r, g)) return nonempty_verdict(r, g, alpha, *w);

  return unknown_verdict(r, g, alpha);
}

Verdict classify_general(i64 alpha, i64 r, i64 g) {
  Verdict rules = classify_general_rules(alpha, r, g);
  if (alpha != 5) return rules;
  Verdict table = classify_alpha5(r, g);
  if (rules.status != Status::Unknown && rules.status != table.status)
    throw std::logic_error("general rules contradict the alpha=5 table at r=" + num(r) +
                           ", g=" + num(g));
  return table;
}

bool revalidate_witness(const Witness& w, i64 alpha, i64 r, i64 g) {
  const i64 d = g + r - alpha;
  try {
    switch (w.kind) {
      case WitnessKind::BrillNoetherGeneral:
        return rho(d, g, r) >= 0;
      case WitnessKind::ExtremalOnScroll: {
        const i64 n = std::stoll(w.params.at("n"));
        const i64 a = std::stoll(w.params.at("a"));
        const i64 b = std::stoll(w.params.at("b"));
        if (n != r - 1 || a < 1) return false;
        const auto sols = scroll_solutions(n, d, g);
        return std::any_of(sols.begin(), sols.end(),
                           [&](const ScrollSolution& s) { return s.a == a && s.b == b; });
      }
      case WitnessKind::QuadricType: {
        const i64 a = std::stoll(w.params.at("a"));
        const i64 b = std::stoll(w.params.at("b"));
        return r == 3 && a + b == d && (a - 1) * (b - 1) == g;
      }
      case WitnessKind::BlownPlaneSystem: {
        const DivisorClass cls = parse_blowup_class(w.params.at("class")).cls;
        const DivisorClass embed = parse_blowup_class(w.params.at("embedding")).cls;
        if (cls.rank() != embed.rank()) return false;
        const i64 pts = static_cast<i64>(cls.rank()) - 1;
        const SurfaceModel s = SurfaceModel::blow_up(pts);
        const auto [deg, genus] = blowup_curve_invariants(s, cls, embed);
        if (deg != d || genus != g) return false;
        // the embedding must be certifiably very ample, and the curve class
        // must carry a smooth member (threshold or its own certificate)
        const AxiomTable& ax = AxiomTable::paper_defaults();
        if (!certify_very_ample(pts, embed, ax)) return false;
        return check_smooth_member(pts, cls) == SmallCase::Yes ||
               certify_very_ample(pts, cls, ax).has_value();
      }
      case WitnessKind::GonalResidual: {
        const i64 k = std::stoll(w.params.at("k"));
        const i64 sigma = std::stoll(w.params.at("sigma"));
        const i64 m = std::stoll(w.params.at("m"));
        const i64 n = std::stoll(w.params.at("n"));
        const i64 e = g - r + alpha - 2;
        if (n != alpha - 1 || m != sigma + 2) return false;
        if (e != n * k + sigma || sigma < 0 || sigma >= n) return false;
        return k >= 4 && 2 * k - g - 2 < 0 && g >= 2 * m + n * (k - 1);
      }
      case WitnessKind::TripleCoverElliptic:
        return g == r + 2 * alpha + 2 && r >= alpha + 5 && g >= 3 * alpha + 7 &&
               d == 2 * r + alpha + 2;
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Empty: return "Empty";
    case Status::NonEmpty: return "NonEmpty";
    default: return "Unknown";
  }
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::BrillNoetherGeneral: return "BrillNoetherGeneral";
    case WitnessKind::ExtremalOnScroll: return "ExtremalOnScroll";
    case WitnessKind::BlownPlaneSystem: return "BlownPlaneSystem";
    case WitnessKind::GonalResidual: return "GonalResidual";
    case WitnessKind::TripleCoverElliptic: return "TripleCoverElliptic";
    default: return "QuadricType";
  }
}

std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::GenusExceedsPi: return "GenusExceedsPi";
    case ObstructionKind::NoIntegerSolutions: return "NoIntegerSolutions";
    case ObstructionKind::CompoundResidual: return "CompoundResidual";
    default: return "HyperellipticNoSpecialVA";
  }
}

std::string to_string(Irreducibility s) {
  switch (s) {
    case Irreducibility::Irreducible: return "Irreducible";
    case Irreducibility::Reducible: return "Reducible";
    case Irreducibility::ExpectedDimComponentOnly: return "ExpectedDimComponentOnly";
    case Irreducibility::MatchesHurwitz31: return "MatchesHurwitz31";
    case Irreducibility::Unknown: return "Unknown";
    default: return "Empty";
  }
}

}  // namespace curveatlas
