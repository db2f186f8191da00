#include "curveatlas/picard.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace curveatlas {

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  if (c.size() != o.c.size()) throw std::invalid_argument("divisor rank mismatch");
  DivisorClass r{c};
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  return *this + (-o);
}

DivisorClass DivisorClass::operator-() const {
  DivisorClass r{c};
  for (auto& x : r.c) x = -x;
  return r;
}

DivisorClass DivisorClass::operator*(i64 k) const {
  DivisorClass r{c};
  for (auto& x : r.c) x *= k;
  return r;
}

bool DivisorClass::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](i64 x) { return x == 0; });
}

DivisorClass blowup_class(i64 a, const std::vector<i64>& b) {
  std::vector<i64> v;
  v.reserve(b.size() + 1);
  v.push_back(a);
  for (i64 bi : b) v.push_back(-bi);
  return DivisorClass{std::move(v)};
}

std::vector<i64> blowup_view(const DivisorClass& d) {
  if (d.c.empty()) throw std::invalid_argument("empty divisor class");
  std::vector<i64> v;
  v.reserve(d.c.size());
  v.push_back(d.c[0]);
  for (std::size_t i = 1; i < d.c.size(); ++i) v.push_back(-d.c[i]);
  return v;
}

SurfaceModel SurfaceModel::hirzebruch(i64 e) {
  if (e < 0) throw std::invalid_argument("Hirzebruch invariant e must be >= 0");
  SurfaceModel s;
  s.kind = SurfaceKind::Hirzebruch;
  s.param = e;
  s.basis_labels = {"C0", "f"};
  s.gram = {{-e, 1}, {1, 0}};
  s.canonical = DivisorClass{{-2, -(e + 2)}};
  return s;
}

SurfaceModel SurfaceModel::blow_up(i64 s_pts) {
  if (s_pts < 0) throw std::invalid_argument("number of blown-up points must be >= 0");
  SurfaceModel s;
  s.kind = SurfaceKind::BlowUp;
  s.param = s_pts;
  s.basis_labels.push_back("l");
  for (i64 i = 1; i <= s_pts; ++i) s.basis_labels.push_back("e" + std::to_string(i));
  const std::size_t n = static_cast<std::size_t>(s_pts) + 1;
  s.gram.assign(n, std::vector<i64>(n, 0));
  s.gram[0][0] = 1;
  for (std::size_t i = 1; i < n; ++i) s.gram[i][i] = -1;
  std::vector<i64> k(n, 1);
  k[0] = -3;
  s.canonical = DivisorClass{std::move(k)};
  return s;
}

SurfaceModel SurfaceModel::blow_up(i64 s_pts, DivisorClass polarization) {
  SurfaceModel s = blow_up(s_pts);
  if (polarization.rank() != s.rank())
    throw std::invalid_argument("polarization rank mismatch");
  s.polarization = std::move(polarization);
  return s;
}

i64 intersect(const SurfaceModel& s, const DivisorClass& d1, const DivisorClass& d2) {
  if (d1.rank() != s.rank() || d2.rank() != s.rank())
    throw std::invalid_argument("divisor rank does not match surface rank");
  i64 acc = 0;
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (d1.c[i] == 0) continue;
    for (std::size_t j = 0; j < s.rank(); ++j) acc += d1.c[i] * s.gram[i][j] * d2.c[j];
  }
  return acc;
}

i64 arithmetic_genus(const SurfaceModel& s, const DivisorClass& d) {
  const i64 n = intersect(s, d, d) + intersect(s, d, s.canonical);
  if (n % 2 != 0) throw std::logic_error("adjunction parity violated");
  return n / 2 + 1;
}

i64 riemann_roch_chi(const SurfaceModel& s, const DivisorClass& d) {
  const i64 n = intersect(s, d, d) - intersect(s, d, s.canonical);
  if (n % 2 != 0) throw std::logic_error("Riemann-Roch parity violated");
  return n / 2 + 1;
}

i64 scroll_system_dim(i64 n, i64 a, i64 b) {
  if (n < 2) throw std::invalid_argument("scroll degree n must be >= 2");
  return a * (a + 1) / 2 * n + (a + 1) * (b + 1) - 1;
}

std::pair<i64, i64> ruled_from_scroll(i64 n, i64 a, i64 b) {
  return {a, n * a + b};
}

std::pair<i64, i64> scroll_from_ruled(i64 n, i64 x, i64 y) {
  return {x, y - n * x};
}

std::pair<i64, i64> f1_from_scroll(i64 a, i64 b) { return {a, 2 * a + b}; }

std::pair<i64, i64> scroll_from_f1(i64 x, i64 y) { return {x, y - 2 * x}; }

DivisorClass convert_f1_blowup(const DivisorClass& d, ConvertDirection dir) {
  if (d.rank() != 2) throw std::invalid_argument("conversion needs a rank-2 class");
  if (dir == ConvertDirection::F1ToBlowUp) {
    // x C0 + y f  ->  y l + (x - y) e
    return DivisorClass{{d.c[1], d.c[0] - d.c[1]}};
  }
  // a l + b e  ->  (a + b) C0 + a f
  return DivisorClass{{d.c[0] + d.c[1], d.c[0]}};
}

DivisorClass convert_f1_blowup(const SurfaceModel& s, const DivisorClass& d,
                               ConvertDirection dir) {
  const SurfaceKind want =
      dir == ConvertDirection::F1ToBlowUp ? SurfaceKind::Hirzebruch : SurfaceKind::BlowUp;
  if (s.kind != want || s.param != 1)
    throw std::invalid_argument("convert_f1_blowup: source surface must be F_1 or P^2_1");
  return convert_f1_blowup(d, dir);
}

std::pair<i64, i64> blowup_curve_invariants(const SurfaceModel& s, const DivisorClass& c,
                                            const DivisorClass& h) {
  return {intersect(s, c, h), arithmetic_genus(s, c)};
}

// --- notation ----------------------------------------------------------------

namespace {

void skip_ws(const std::string& t, std::size_t& i) {
  while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
}

i64 parse_int(const std::string& t, std::size_t& i) {
  skip_ws(t, i);
  std::size_t start = i;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
  if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(t[start]))))
    throw std::invalid_argument("bad integer in divisor notation: " + t);
  return std::stoll(t.substr(start, i - start));
}

}  // namespace

ParsedClass parse_blowup_class(const std::string& text) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '(')
    throw std::invalid_argument("divisor notation must start with '(': " + text);
  ++i;
  const i64 a = parse_int(text, i);
  skip_ws(text, i);
  std::vector<i64> b;
  if (i < text.size() && text[i] == ';') {
    ++i;
    for (;;) {
      skip_ws(text, i);
      if (i < text.size() && text[i] == ')') break;
      const i64 val = parse_int(text, i);
      i64 mult = 1;
      skip_ws(text, i);
      if (i < text.size() && text[i] == '^') {
        ++i;
        mult = parse_int(text, i);
        if (mult < 0) throw std::invalid_argument("negative exponent in divisor notation");
      }
      for (i64 k = 0; k < mult; ++k) b.push_back(val);
      skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
  }
  skip_ws(text, i);
  if (i >= text.size() || text[i] != ')')
    throw std::invalid_argument("unterminated divisor notation: " + text);

  ParsedClass out;
  std::vector<int> idx(b.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return b[x] > b[y]; });
  std::vector<i64> sorted;
  sorted.reserve(b.size());
  for (int k : idx) sorted.push_back(b[k]);
  out.permutation = idx;
  out.cls = blowup_class(a, sorted);
  return out;
}

std::string format_blowup_class(const DivisorClass& d) {
  const std::vector<i64> v = blowup_view(d);
  std::ostringstream os;
  os << '(' << v[0];
  if (v.size() > 1) {
    os << ';';
    std::size_t i = 1;
    bool first = true;
    while (i < v.size()) {
      std::size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      const std::size_t m = j - i;
      if (!first) os << ',';
      os << v[i];
      if (m > 1) os << '^' << m;
      first = false;
      i = j;
    }
  }
  os << ')';
  return os.str();
}

std::string format_ruled_class(const DivisorClass& d) {
  if (d.rank() != 2) throw std::invalid_argument("ruled class must have rank 2");
  std::ostringstream os;
  os << d.c[0] << "C0";
  if (d.c[1] >= 0)
    os << '+' << d.c[1] << 'f';
  else
    os << d.c[1] << 'f';
  return os.str();
}

}  // namespace curveatlas
