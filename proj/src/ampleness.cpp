#include "curveatlas/ampleness.hpp"

#include <algorithm>
#include <sstream>

namespace curveatlas {

namespace {

bool nonnegative_view(const DivisorClass& d) {
  const auto v = blowup_view(d);
  return std::all_of(v.begin(), v.end(), [](i64 x) { return x >= 0; });
}

bool sorted_descending(const std::vector<i64>& b) {
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i - 1] < b[i]) return false;
  return true;
}

}  // namespace

DivisorClass pad_to(const DivisorClass& cls, i64 s) {
  if (static_cast<i64>(cls.rank()) - 1 > s)
    throw std::invalid_argument("pad_to: class already longer than target");
  DivisorClass out = cls;
  out.c.resize(static_cast<std::size_t>(s) + 1, 0);
  return out;
}

void AxiomTable::add(PositivityAxiom ax) {
  if (ax.citation.empty()) throw std::invalid_argument("axiom without citation");
  if (static_cast<i64>(ax.cls.rank()) != ax.s + 1)
    throw std::invalid_argument("axiom class length does not match its surface");
  axioms_.push_back(std::move(ax));
}

std::optional<PositivityAxiom> AxiomTable::find_very_ample(const DivisorClass& cls,
                                                           i64 s) const {
  for (const auto& ax : axioms_)
    if (ax.property == Positivity::VeryAmple && ax.s == s && ax.cls == cls) return ax;
  return std::nullopt;
}

std::optional<PositivityAxiom> AxiomTable::find_base_point_free(const DivisorClass& cls,
                                                                i64 s) const {
  for (const auto& ax : axioms_) {
    if (ax.property == Positivity::NotVeryAmple) continue;
    if (ax.s > s) continue;
    if (pad_to(ax.cls, s) == cls) return ax;
  }
  return std::nullopt;
}

std::optional<PositivityAxiom> AxiomTable::find_not_very_ample(const DivisorClass& cls,
                                                               i64 s) const {
  for (const auto& ax : axioms_)
    if (ax.property == Positivity::NotVeryAmple && ax.s == s && ax.cls == cls) return ax;
  return std::nullopt;
}

AxiomTable AxiomTable::parse(const std::string& text) {
  AxiomTable table;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string cls_text, surface, property;
    if (!(ls >> cls_text)) continue;  // blank line
    if (!(ls >> surface >> property))
      throw std::invalid_argument("axiom line " + std::to_string(lineno) + ": expected class, surface, property, citation");
    std::string citation;
    std::getline(ls, citation);
    const auto first = citation.find_first_not_of(" \t");
    citation = first == std::string::npos ? std::string{} : citation.substr(first);
    if (citation.empty())
      throw std::invalid_argument("axiom line " + std::to_string(lineno) + ": missing citation");
    if (surface.rfind("P2_", 0) != 0)
      throw std::invalid_argument("axiom line " + std::to_string(lineno) + ": surface must be P2_<s>");
    const i64 s = std::stoll(surface.substr(3));
    Positivity p;
    if (property == "very_ample")
      p = Positivity::VeryAmple;
    else if (property == "base_point_free")
      p = Positivity::BasePointFree;
    else if (property == "not_very_ample")
      p = Positivity::NotVeryAmple;
    else
      throw std::invalid_argument("axiom line " + std::to_string(lineno) + ": unknown property " + property);
    table.add({parse_blowup_class(cls_text).cls, s, p, citation});
  }
  return table;
}

bool PositivityCertificate::revalidate() const {
  if (summands.empty()) return !citation.empty();
  DivisorClass acc{std::vector<i64>(target.rank(), 0)};
  for (const auto& [cls, cit] : summands) {
    if (cls.rank() != target.rank() || cit.empty()) return false;
    acc = acc + cls;
  }
  return acc == target;
}

SmallCase check_smooth_member(i64 s, const DivisorClass& cls) {
  if (s < 3 || s > 6) return SmallCase::OutOfScope;
  if (static_cast<i64>(cls.rank()) != s + 1) return SmallCase::OutOfScope;
  const auto v = blowup_view(cls);
  const i64 a = v[0];
  const std::vector<i64> b(v.begin() + 1, v.end());
  if (!sorted_descending(b)) return SmallCase::OutOfScope;
  if (a < b[0] + b[1] + b[2]) return SmallCase::OutOfScope;
  if (a < std::max<i64>(0, b[0])) return SmallCase::OutOfScope;
  if (b.back() < 0) return SmallCase::No;
  // excluded shape (a; a, 0, ..., 0) with a >= 2
  if (a >= 2 && b[0] == a &&
      std::all_of(b.begin() + 1, b.end(), [](i64 x) { return x == 0; }))
    return SmallCase::No;
  return SmallCase::Yes;
}

NormalityResult check_linear_normality_small(i64 s, const DivisorClass& cls) {
  if (s < 3 || s > 6) return {SmallCase::OutOfScope, ""};
  if (static_cast<i64>(cls.rank()) != s + 1) return {SmallCase::OutOfScope, ""};
  const auto v = blowup_view(cls);
  const i64 a = v[0];
  const std::vector<i64> b(v.begin() + 1, v.end());
  if (!sorted_descending(b)) return {SmallCase::OutOfScope, ""};
  if (a < b[0] + b[1] + b[2]) return {SmallCase::OutOfScope, ""};
  if (a < std::max<i64>(0, b[0])) return {SmallCase::OutOfScope, ""};

  // (λ+3t; λ+t, t, ..., t) with λ >= 2: normal iff t >= 2
  const i64 t = b.back();
  const bool tail_constant = std::all_of(b.begin() + 1, b.end(), [&](i64 x) { return x == t; });
  const i64 lambda = b[0] - t;
  if (tail_constant && lambda >= 2 && a == lambda + 3 * t) {
    if (t >= 2) return {SmallCase::Yes, "exceptional family, t >= 2"};
    return {SmallCase::No, "exceptional family (λ+3t; λ+t, t, ..., t) with t <= 1"};
  }
  return {b.back() >= 1 ? SmallCase::Yes : SmallCase::No, ""};
}

CorollaryB check_linear_normality_corollary_b(const DivisorClass& embed, const DivisorClass& L,
                                              i64 s, const AxiomTable& axioms) {
  if (embed.rank() != L.rank() || static_cast<i64>(embed.rank()) != s + 1)
    return CorollaryB::NotApplicable;
  const auto ev = blowup_view(embed);
  const i64 a = ev[0];
  i64 sum_b = 0;
  for (std::size_t i = 1; i < ev.size(); ++i) {
    if (ev[i] < 1) return CorollaryB::NotApplicable;  // needs b_s >= 1
    sum_b += ev[i];
  }
  if (sum_b >= 3 * a) return CorollaryB::NotApplicable;

  const DivisorClass diff = L - embed;
  if (diff.is_zero()) return CorollaryB::NotApplicable;  // no curve in |0|
  if (!nonnegative_view(diff)) return CorollaryB::NotApplicable;

  // smooth connected member of |diff|: small-s threshold when it applies,
  // otherwise a big cited base-point-free system (or sum of them; Bertini).
  if (check_smooth_member(s, diff) == SmallCase::Yes) return CorollaryB::Yes;
  if (certify_base_point_free(s, diff, axioms)) {
    const SurfaceModel surf = SurfaceModel::blow_up(s);
    if (intersect(surf, diff, diff) > 0) return CorollaryB::Yes;
  }
  return CorollaryB::NotApplicable;
}

namespace {

bool cover_with_bpf(i64 s, const DivisorClass& remainder, const AxiomTable& axioms, int depth,
                    std::vector<std::pair<DivisorClass, std::string>>& out) {
  if (remainder.is_zero()) return true;
  if (depth == 0) return false;
  if (auto ax = axioms.find_base_point_free(remainder, s)) {
    out.emplace_back(remainder, ax->citation);
    return true;
  }
  for (const auto& ax : axioms.all()) {
    if (ax.property == Positivity::NotVeryAmple || ax.s > s) continue;
    const DivisorClass padded = pad_to(ax.cls, s);
    const DivisorClass next = remainder - padded;
    if (!nonnegative_view(next)) continue;
    out.emplace_back(padded, ax.citation);
    if (cover_with_bpf(s, next, axioms, depth - 1, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

std::optional<PositivityCertificate> certify_very_ample(i64 s, const DivisorClass& cls,
                                                        const AxiomTable& axioms) {
  if (static_cast<i64>(cls.rank()) != s + 1)
    throw std::invalid_argument("certify_very_ample: class length must be s+1");
  if (auto ax = axioms.find_very_ample(cls, s))
    return PositivityCertificate{cls, Positivity::VeryAmple, {}, ax->citation};

  for (const auto& ax : axioms.all()) {
    if (ax.property != Positivity::VeryAmple || ax.s != s) continue;
    const DivisorClass rem = cls - ax.cls;
    if (!nonnegative_view(rem)) continue;
    std::vector<std::pair<DivisorClass, std::string>> summands;
    summands.emplace_back(ax.cls, ax.citation);
    if (cover_with_bpf(s, rem, axioms, 3, summands)) {
      PositivityCertificate cert{cls, Positivity::VeryAmple, std::move(summands),
                                 "very ample + base-point-free decomposition"};
      if (!cert.revalidate()) throw std::logic_error("certificate failed revalidation");
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<PositivityCertificate> certify_base_point_free(i64 s, const DivisorClass& cls,
                                                             const AxiomTable& axioms) {
  if (static_cast<i64>(cls.rank()) != s + 1)
    throw std::invalid_argument("certify_base_point_free: class length must be s+1");
  if (cls.is_zero()) return std::nullopt;
  std::vector<std::pair<DivisorClass, std::string>> summands;
  if (!cover_with_bpf(s, cls, axioms, 3, summands)) return std::nullopt;
  PositivityCertificate cert{cls, Positivity::BasePointFree, std::move(summands),
                             "sum of base-point-free systems"};
  if (!cert.revalidate()) throw std::logic_error("certificate failed revalidation");
  return cert;
}

RestrictionIso restriction_iso_check(const SurfaceModel& s, const DivisorClass& d,
                                     const DivisorClass& c, const AxiomTable& axioms) {
  if (!s.polarization) return RestrictionIso::Unknown;
  if (d.rank() != s.rank() || c.rank() != s.rank()) return RestrictionIso::Unknown;
  const DivisorClass diff = d - c;
  if (!(diff == s.canonical - *s.polarization)) return RestrictionIso::Unknown;

  DivisorClass kernel_neg = -diff;  // = P - K
  i64 pts;
  if (s.kind == SurfaceKind::BlowUp) {
    pts = s.param;
  } else if (s.kind == SurfaceKind::Hirzebruch && s.param == 1) {
    kernel_neg = convert_f1_blowup(kernel_neg, ConvertDirection::F1ToBlowUp);
    pts = 1;
  } else {
    return RestrictionIso::Unknown;
  }
  if (certify_very_ample(pts, kernel_neg, axioms)) return RestrictionIso::Iso;
  return RestrictionIso::Unknown;
}

}  // namespace curveatlas
