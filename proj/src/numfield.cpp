#include "qb/numfield.hpp"

#include <sstream>
#include <stdexcept>

namespace qb {

std::string field_id_name(FieldId id) {
  switch (id) {
    case FieldId::Q: return "Q";
    case FieldId::GaussQ: return "Q(i)";
    case FieldId::Root2Q: return "Q(sqrt2)";
    case FieldId::Zeta8Q: return "Q(zeta8)";
    case FieldId::M8: return "M";
  }
  return "?";
}

// ---------------------------------------------------------------- NFElement

NFElement::NFElement(const NumberField* f, RatPoly rep) : field_(f) {
  rep = rp_mod(std::move(rep), f->min_poly);
  rep.resize(f->degree(), Rational(0));
  c_ = std::move(rep);
}

bool NFElement::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool NFElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational NFElement::rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

Rational NFElement::rational_value() const {
  if (!is_rational()) throw std::domain_error("rational_value: element not rational");
  return rational_part();
}

static void check_same(const NFElement& a, const NFElement& b) {
  if (a.field() == nullptr || a.field() != b.field())
    throw std::invalid_argument("NFElement: field mismatch");
}

NFElement NFElement::operator-() const {
  NFElement r = *this;
  RatPoly c = r.coeffs();
  for (auto& x : c) x = -x;
  return NFElement(field_, std::move(c));
}

NFElement operator+(const NFElement& a, const NFElement& b) {
  check_same(a, b);
  return NFElement(a.field_, rp_add(a.c_, b.c_));
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  check_same(a, b);
  return NFElement(a.field_, rp_sub(a.c_, b.c_));
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  check_same(a, b);
  return NFElement(a.field_, rp_mul(a.c_, b.c_));
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw std::domain_error("NFElement: inverse of zero");
  auto x = rp_xgcd(rp_trim(c_), field_->min_poly);
  if (rp_deg(x.g) != 0) throw std::logic_error("NFElement: min poly not coprime with element");
  // g == 1, so s * rep == 1 mod minpoly.
  return NFElement(field_, x.s);
}

NFElement operator/(const NFElement& a, const NFElement& b) {
  check_same(a, b);
  return a * b.inverse();
}

bool operator==(const NFElement& a, const NFElement& b) {
  check_same(a, b);
  return a.c_ == b.c_;
}

bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

NFElement NFElement::pow(long k) const {
  NFElement base = *this;
  if (k < 0) {
    base = inverse();
    k = -k;
  }
  NFElement acc = field_->one();
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::string NFElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (v < 0) { os << "-"; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    if (i == 0) {
      os << rat_str(v);
    } else {
      if (v != 1) os << rat_str(v) << "*";
      os << field_->gen_symbol;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ------------------------------------------------------------ linear algebra

RatMatrix mat_inverse(const RatMatrix& m) {
  size_t n = m.size();
  RatMatrix a = m, inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("mat_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (size_t j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) { a[r][j] -= f * a[col][j]; inv[r][j] -= f * inv[col][j]; }
    }
  }
  return inv;
}

std::vector<Rational> mat_apply(const RatMatrix& m, const std::vector<Rational>& v) {
  std::vector<Rational> r(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

// ----------------------------------------------------------- QuadraticSplit

NFElement QuadraticSplit::embed(const NFElement& u) const {
  const NumberField* K = gen_image.field();
  NFElement acc = K->zero();
  const auto& c = u.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * gen_image + K->from_rational(*it);
  return acc;
}

std::pair<NFElement, NFElement> QuadraticSplit::split(const NFElement& x) const {
  auto sol = mat_apply(to_pair, x.coeffs());
  int db = base->degree();
  RatPoly uc(sol.begin(), sol.begin() + db), vc(sol.begin() + db, sol.end());
  return {base->element(std::move(uc)), base->element(std::move(vc))};
}

NFElement QuadraticSplit::combine(const NFElement& u, const NFElement& v) const {
  return embed(u) + embed(v) * g;
}

NFElement QuadraticSplit::conj(const NFElement& x) const {
  auto [u, v] = split(x);
  return embed(u) - embed(v) * g;
}

NFElement QuadraticSplit::norm(const NFElement& x) const {
  auto [u, v] = split(x);
  return u * u - delta * v * v;
}

// -------------------------------------------------------------- NumberField

NFElement NumberField::zero() const { return NFElement(this, {}); }
NFElement NumberField::one() const { return NFElement(this, {Rational(1)}); }
NFElement NumberField::from_rational(const Rational& r) const { return NFElement(this, {r}); }
NFElement NumberField::gen() const { return NFElement(this, {Rational(0), Rational(1)}); }
NFElement NumberField::element(RatPoly rep) const { return NFElement(this, std::move(rep)); }

bool NumberField::has_i() const {
  return id == FieldId::GaussQ || id == FieldId::Zeta8Q || id == FieldId::M8;
}

const QuadraticSplit* NumberField::tower() const {
  return splits.empty() ? nullptr : splits[0].get();
}

const QuadraticSplit* NumberField::split_over(FieldId base_id) const {
  for (const auto& s : splits)
    if (s->base->id == base_id) return s.get();
  return nullptr;
}

// ------------------------------------------------------------------ catalog

namespace {

std::unique_ptr<QuadraticSplit> make_split(const NumberField* top, const NumberField* base,
                                           NFElement gen_image, NFElement g, NFElement delta) {
  auto s = std::make_unique<QuadraticSplit>();
  s->base = base;
  s->gen_image = gen_image;
  s->g = g;
  s->delta = delta;
  // Certify the data: base min poly vanishes at gen_image, and g^2 = delta.
  {
    NFElement acc = top->zero();
    for (auto it = base->min_poly.rbegin(); it != base->min_poly.rend(); ++it)
      acc = acc * gen_image + top->from_rational(*it);
    if (!acc.is_zero()) throw std::logic_error("make_split: generator image check failed");
    if (g * g != s->embed(delta)) throw std::logic_error("make_split: delta check failed");
  }
  int d = top->degree(), db = base->degree();
  if (d != 2 * db) throw std::logic_error("make_split: degree mismatch");
  RatMatrix cols(d, std::vector<Rational>(d, Rational(0)));
  NFElement bpow = top->one();
  for (int j = 0; j < db; ++j) {
    NFElement e1 = bpow, e2 = bpow * g;
    for (int r = 0; r < d; ++r) {
      cols[r][j] = e1.coeffs()[r];
      cols[r][db + j] = e2.coeffs()[r];
    }
    bpow = bpow * gen_image;
  }
  s->from_pair = cols;
  s->to_pair = mat_inverse(cols);  // throws if the tower basis is dependent
  return s;
}

struct Catalog {
  NumberField Q, Qi, Qr2, Qz8, M;
  std::map<std::pair<FieldId, FieldId>, NFElement> gen_images;
  std::map<FieldId, std::map<std::string, NFElement>> constants;

  Catalog() {
    Q.id = FieldId::Q; Q.name = "Q"; Q.gen_symbol = "_"; Q.min_poly = {Rational(0), Rational(1)};
    Qi.id = FieldId::GaussQ; Qi.name = "Q(i)"; Qi.gen_symbol = "i";
    Qi.min_poly = {Rational(1), Rational(0), Rational(1)};
    Qr2.id = FieldId::Root2Q; Qr2.name = "Q(sqrt2)"; Qr2.gen_symbol = "sqrt2";
    Qr2.min_poly = {Rational(-2), Rational(0), Rational(1)};
    Qz8.id = FieldId::Zeta8Q; Qz8.name = "Q(zeta8)"; Qz8.gen_symbol = "zeta8";
    Qz8.min_poly = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)};

    Qi.splits.push_back(make_split(&Qi, &Q, Qi.zero(), Qi.gen(), Q.from_rational(-1)));
    Qr2.splits.push_back(make_split(&Qr2, &Q, Qr2.zero(), Qr2.gen(), Q.from_rational(2)));

    NFElement alpha = Qz8.gen();
    NFElement z8_i = alpha * alpha;
    NFElement z8_s2 = alpha - alpha.pow(3);
    Qz8.splits.push_back(make_split(&Qz8, &Qi, z8_i, z8_s2, Qi.from_rational(2)));
    Qz8.splits.push_back(make_split(&Qz8, &Qr2, z8_s2, z8_i, Qr2.from_rational(-1)));

    // Build M = Q(zeta8)(rho), rho = 2^{1/4}, on the power basis of
    // theta = i + rho.  Work in pairs (p, q) over Q(zeta8) meaning p + q*rho.
    using Pair = std::pair<NFElement, NFElement>;
    auto pmul = [&](const Pair& a, const Pair& b) {
      return Pair{a.first * b.first + a.second * b.second * z8_s2,
                  a.first * b.second + a.second * b.first};
    };
    auto pvec = [&](const Pair& p) {
      std::vector<Rational> v = p.first.coeffs();
      const auto& qv = p.second.coeffs();
      v.insert(v.end(), qv.begin(), qv.end());
      return v;
    };
    Pair theta{z8_i, Qz8.one()};
    Pair tp{Qz8.one(), Qz8.zero()};
    RatMatrix T(8, std::vector<Rational>(8, Rational(0)));
    for (int j = 0; j < 8; ++j) {
      auto v = pvec(tp);
      for (int r = 0; r < 8; ++r) T[r][j] = v[r];
      tp = pmul(tp, theta);
    }
    RatMatrix Tinv = mat_inverse(T);  // certifies theta has degree 8
    auto theta8 = mat_apply(Tinv, pvec(tp));
    RatPoly m(9, Rational(0));
    m[8] = 1;
    for (int j = 0; j < 8; ++j) m[j] = -theta8[j];
    M.id = FieldId::M8; M.name = "M"; M.gen_symbol = "theta"; M.min_poly = m;
    for (const auto& c : m)
      if (!rat_is_integer(c)) throw std::logic_error("catalog: theta min poly not integral");

    auto coords_of = [&](const Pair& p) { return mat_apply(Tinv, pvec(p)); };
    NFElement z8_in_M = M.element(coords_of({alpha, Qz8.zero()}));
    NFElement rho = M.element(coords_of({Qz8.zero(), Qz8.one()}));
    M.splits.push_back(make_split(&M, &Qz8, z8_in_M, rho, z8_s2));

    // Canonical inclusion generator images.
    auto reg = [&](FieldId a, FieldId b, NFElement img) { gen_images[{a, b}] = img; };
    reg(FieldId::Q, FieldId::GaussQ, Qi.zero());
    reg(FieldId::Q, FieldId::Root2Q, Qr2.zero());
    reg(FieldId::Q, FieldId::Zeta8Q, Qz8.zero());
    reg(FieldId::Q, FieldId::M8, M.zero());
    reg(FieldId::GaussQ, FieldId::Zeta8Q, z8_i);
    reg(FieldId::Root2Q, FieldId::Zeta8Q, z8_s2);
    reg(FieldId::Zeta8Q, FieldId::M8, z8_in_M);
    reg(FieldId::GaussQ, FieldId::M8, z8_in_M * z8_in_M);
    reg(FieldId::Root2Q, FieldId::M8, z8_in_M - z8_in_M.pow(3));

    auto& cQi = constants[FieldId::GaussQ];
    cQi["i"] = Qi.gen();
    auto& cQr2 = constants[FieldId::Root2Q];
    cQr2["sqrt2"] = Qr2.gen();
    auto& cQz8 = constants[FieldId::Zeta8Q];
    cQz8["zeta8"] = alpha;
    cQz8["i"] = z8_i;
    cQz8["sqrt2"] = z8_s2;
    auto& cM = constants[FieldId::M8];
    cM["zeta8"] = z8_in_M;
    cM["i"] = z8_in_M * z8_in_M;
    cM["sqrt2"] = z8_in_M - z8_in_M.pow(3);
    cM["root4_2"] = rho;
    if (rho * rho != cM["sqrt2"]) throw std::logic_error("catalog: rho^2 != sqrt2 in M");
  }
};

const Catalog& catalog() {
  static Catalog c;
  return c;
}

NFElement lookup_const(const NumberField& K, const std::string& name) {
  const auto& cat = catalog();
  auto fit = cat.constants.find(K.id);
  if (fit != cat.constants.end()) {
    auto it = fit->second.find(name);
    if (it != fit->second.end()) return it->second;
  }
  throw std::domain_error("field " + K.name + " has no constant " + name);
}

}  // namespace

const NumberField& field_Q() { return catalog().Q; }
const NumberField& field_Qi() { return catalog().Qi; }
const NumberField& field_Qsqrt2() { return catalog().Qr2; }
const NumberField& field_Qzeta8() { return catalog().Qz8; }
const NumberField& field_M() { return catalog().M; }

const NumberField& field_by_id(FieldId id) {
  switch (id) {
    case FieldId::Q: return field_Q();
    case FieldId::GaussQ: return field_Qi();
    case FieldId::Root2Q: return field_Qsqrt2();
    case FieldId::Zeta8Q: return field_Qzeta8();
    case FieldId::M8: return field_M();
  }
  throw std::logic_error("field_by_id");
}

NFElement nf_i(const NumberField& K) { return lookup_const(K, "i"); }
NFElement nf_sqrt2(const NumberField& K) { return lookup_const(K, "sqrt2"); }
NFElement nf_zeta8(const NumberField& K) { return lookup_const(K, "zeta8"); }
NFElement nf_root4_2(const NumberField& K) { return lookup_const(K, "root4_2"); }

bool has_embedding(FieldId src, FieldId dst) {
  if (src == dst) return true;
  return catalog().gen_images.count({src, dst}) > 0;
}

NFElement embed_to(const NFElement& x, const NumberField& dst) {
  if (x.field() == &dst) return x;
  auto it = catalog().gen_images.find({x.field()->id, dst.id});
  if (it == catalog().gen_images.end())
    throw std::domain_error("no embedding " + x.field()->name + " -> " + dst.name);
  NFElement acc = dst.zero();
  const auto& c = x.coeffs();
  for (auto itc = c.rbegin(); itc != c.rend(); ++itc)
    acc = acc * it->second + dst.from_rational(*itc);
  return acc;
}

// ----------------------------------------------------------------- n-th root

namespace {

std::optional<NFElement> sqrt_rec(const NFElement& x) {
  const NumberField* K = x.field();
  if (x.is_zero()) return K->zero();
  if (K->id == FieldId::Q) {
    auto r = rat_nth_root(x.rational_value(), 2);
    if (!r) return std::nullopt;
    return K->from_rational(*r);
  }
  const QuadraticSplit* T = K->tower();
  auto [u, v] = T->split(x);
  if (v.is_zero()) {
    if (auto r = sqrt_rec(u)) return T->embed(*r);
    if (auto r = sqrt_rec(u / T->delta)) return T->embed(*r) * T->g;
    return std::nullopt;
  }
  // (a + b g)^2 = a^2 + delta b^2 + 2ab g  with a, b in the base:
  // a^2 is a root of A^2 - uA + delta v^2/4, so u^2 - delta v^2 must be a
  // base-field square whenever x is a square.
  auto s = sqrt_rec(u * u - T->delta * v * v);
  if (!s) return std::nullopt;
  const NumberField* B = T->base;
  NFElement two = B->from_rational(2);
  for (int sg : {+1, -1}) {
    NFElement A = (sg > 0 ? u + *s : u - *s) / two;
    auto a = sqrt_rec(A);
    if (a && !a->is_zero()) {
      NFElement b = v / (two * *a);
      NFElement cand = T->combine(*a, b);
      if (cand * cand == x) return cand;
    }
  }
  return std::nullopt;
}

NFElement canonical_root(const NFElement& one_root, int n) {
  const NumberField* K = one_root.field();
  std::vector<NFElement> units = {K->one(), -K->one()};
  if (n == 4 && K->has_i()) {
    NFElement i = nf_i(*K);
    units.push_back(i);
    units.push_back(-i);
  }
  std::optional<NFElement> best;
  for (const auto& u : units) {
    NFElement cand = one_root * u;
    const auto& c = cand.coeffs();
    int top = -1;
    for (int j = (int)c.size() - 1; j >= 0; --j)
      if (c[j] != 0) { top = j; break; }
    if (top < 0 || c[top] < 0) continue;
    if (!best) { best = cand; continue; }
    const auto& b = best->coeffs();
    for (int j = (int)c.size() - 1; j >= 0; --j) {
      if (c[j] == b[j]) continue;
      if (c[j] > b[j]) best = cand;
      break;
    }
  }
  return best ? *best : one_root;  // zero falls through
}

}  // namespace

std::optional<NFElement> nf_nth_root(const NFElement& x, int n) {
  if (n != 1 && n != 2 && n != 4) throw std::invalid_argument("nf_nth_root: n must be 1, 2 or 4");
  if (n == 1) return x;
  if (x.is_zero()) return x.field()->zero();
  auto r2 = sqrt_rec(x);
  if (!r2) return std::nullopt;
  if (n == 2) return canonical_root(*r2, 2);
  for (const NFElement& y : {*r2, -*r2})
    if (auto r = sqrt_rec(y)) return canonical_root(*r, 4);
  return std::nullopt;
}

bool nf_is_nth_power(const NFElement& x, int n) { return nf_nth_root(x, n).has_value(); }

}  // namespace qb
