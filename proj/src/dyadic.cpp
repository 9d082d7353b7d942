#include "qb/dyadic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace qb {

namespace {

int env_prec() {
  if (const char* s = std::getenv("QB_PRECISION")) {
    int n = std::atoi(s);
    if (n >= 16) return n;
  }
  return 40;
}

int& prec_override() {
  static int n = 0;
  return n;
}

// Reduce a rational with 2-power-times-odd denominator modulo 2^k,
// returning a representative with the same 2-power denominator.
Rational trunc_coeff(const Rational& c, long k) {
  if (c == 0) return c;
  Integer num = c.get_num(), den = c.get_den();
  long s = mpz_scan1(den.get_mpz_t(), 0);
  Integer odd = den >> s;
  long kk = k + s;
  if (kk <= 0) return c;
  Integer mod = Integer(1) << kk;
  Integer oinv;
  if (mpz_invert(oinv.get_mpz_t(), odd.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw std::logic_error("trunc_coeff: even odd-part");
  Integer r = (num % mod) * oinv % mod;
  if (r < 0) r += mod;
  Rational out(r, Integer(1) << s);
  out.canonicalize();
  return out;
}

Integer coeff_mod_pow2(const Rational& c, long k) {
  Integer mod = Integer(1) << k;
  if (c == 0) return Integer(0);
  Integer num = c.get_num(), den = c.get_den();
  Integer dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
    throw dy_precision_error("residue key: coefficient not 2-integral");
  Integer r = (num % mod) * dinv % mod;
  if (r < 0) r += mod;
  return r;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  RatMatrix out(n, std::vector<Rational>(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
  return out;
}

std::vector<Rational> padded(std::vector<Rational> v, int n) {
  v.resize(n, Rational(0));
  return v;
}

// ---- field catalog ----

struct DyCatalog {
  DyadicField F[5];

  DyadicField make(FieldId id, const std::string& label, int e,
                   const NFElement& pi_elt) {
    DyadicField K;
    K.id = id;
    K.label = label;
    K.global = &field_by_id(id);
    K.min_poly = K.global->min_poly;
    K.deg = K.global->degree();
    K.e = e;
    if (K.deg != e) throw std::logic_error("dyadic catalog: f != 1");
    K.pi = pi_elt.coeffs();
    // pi-power basis -> generator basis, then invert.
    RatMatrix P(K.deg, std::vector<Rational>(K.deg, Rational(0)));
    NFElement pw = K.global->one();
    for (int j = 0; j < K.deg; ++j) {
      for (int r = 0; r < K.deg; ++r) P[r][j] = pw.coeffs()[r];
      pw = pw * pi_elt;
    }
    K.to_pi = mat_inverse(P);
    return K;
  }

  DyCatalog() {
    const NumberField &Q = field_Q(), &Qi = field_Qi(), &Qr2 = field_Qsqrt2(),
                      &Qz8 = field_Qzeta8(), &M = field_M();
    F[0] = make(FieldId::Q, "Q2", 1, Q.from_rational(Rational(2)));
    F[1] = make(FieldId::GaussQ, "Q2(i)", 2, Qi.one() + nf_i(Qi));
    F[2] = make(FieldId::Root2Q, "Q2(sqrt2)", 2, nf_sqrt2(Qr2));
    F[3] = make(FieldId::Zeta8Q, "Q2(zeta8)", 4, nf_zeta8(Qz8) - Qz8.one());
    NFElement c1 = nf_zeta8(M) - M.one() - nf_root4_2(M);
    NFElement piM = c1 * c1 * c1 / M.from_rational(Rational(2));
    F[4] = make(FieldId::M8, "M_u", 8, piM);
    // Cross-check v(pi) = 1 and v(2) = e against the norm (resultant).
    for (const DyadicField& K : F) {
      RatPoly pirep = K.pi;
      long vres = rat_val2(rp_resultant(K.min_poly, rp_trim(pirep)));
      if (vres != 1) throw std::logic_error("dyadic catalog: pi not a uniformizer");
    }
  }
};

const DyCatalog& dycat() {
  static DyCatalog c;
  return c;
}

std::optional<long> rep_val(const DyadicField& K, const std::vector<Rational>& c) {
  auto coords = mat_apply(K.to_pi, padded(c, K.deg));
  std::optional<long> best;
  for (int j = 0; j < K.deg; ++j)
    if (coords[j] != 0) {
      long v = j + (long)K.deg * rat_val2(coords[j]);
      if (!best || v < *best) best = v;
    }
  return best;
}

}  // namespace

int dy_default_prec() {
  if (prec_override() > 0) return prec_override();
  static int base = env_prec();
  return base;
}

void dy_set_default_prec(int n) { prec_override() = n > 0 ? n : 0; }

const DyadicField& dy_field(FieldId id) {
  switch (id) {
    case FieldId::Q: return dycat().F[0];
    case FieldId::GaussQ: return dycat().F[1];
    case FieldId::Root2Q: return dycat().F[2];
    case FieldId::Zeta8Q: return dycat().F[3];
    case FieldId::M8: return dycat().F[4];
  }
  throw std::logic_error("dy_field: bad id");
}
const DyadicField& dyQ2() { return dy_field(FieldId::Q); }
const DyadicField& dyQ2i() { return dy_field(FieldId::GaussQ); }
const DyadicField& dyQ2r2() { return dy_field(FieldId::Root2Q); }
const DyadicField& dyQ2z8() { return dy_field(FieldId::Zeta8Q); }
const DyadicField& dyMu() { return dy_field(FieldId::M8); }

// ---- element core ----

DyadicElt::DyadicElt(const DyadicField* K, RatPoly rep, long prec, long vlow)
    : K_(K), prec_(prec), vlow_(std::min(vlow, prec)) {
  rep = rp_mod(std::move(rep), K->min_poly);
  c_ = padded(std::move(rep), K->deg);
  long q = (prec_ + K->deg - 1) / K->deg;  // 2^q has valuation >= prec
  if (prec_ > 0 && q > 0)
    for (auto& x : c_) x = trunc_coeff(x, q);
}

bool DyadicElt::rep_is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

DyadicElt DyadicElt::operator-() const {
  return DyadicElt(K_, rp_neg(c_), prec_, vlow_);
}

DyadicElt operator+(const DyadicElt& a, const DyadicElt& b) {
  return DyadicElt(a.K_, rp_add(a.c_, b.c_), std::min(a.prec_, b.prec_),
                   std::min(a.vlow_, b.vlow_));
}

DyadicElt operator-(const DyadicElt& a, const DyadicElt& b) {
  return DyadicElt(a.K_, rp_sub(a.c_, b.c_), std::min(a.prec_, b.prec_),
                   std::min(a.vlow_, b.vlow_));
}

DyadicElt operator*(const DyadicElt& a, const DyadicElt& b) {
  long p = std::min({a.prec_ + b.vlow_, b.prec_ + a.vlow_, a.prec_ + b.prec_});
  return DyadicElt(a.K_, rp_mul(rp_trim(a.c_), rp_trim(b.c_)), p, a.vlow_ + b.vlow_);
}

DyadicElt DyadicElt::inverse() const {
  long v = dy_val(*this);
  auto x = rp_xgcd(rp_trim(c_), K_->min_poly);
  RatPoly s = rp_scale(x.s, Rational(1) / x.g[0]);
  return DyadicElt(K_, std::move(s), prec_ - 2 * v, -v);
}

DyadicElt DyadicElt::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  DyadicElt acc = dy_one(*K_, (int)prec_);
  DyadicElt base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

DyadicElt operator/(const DyadicElt& a, const DyadicElt& b) { return a * b.inverse(); }

std::string DyadicElt::str() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < K_->deg; ++j) {
    if (c_[j] == 0) continue;
    if (!first) os << " + ";
    os << rat_str(c_[j]);
    if (j >= 1) os << "*" << K_->global->gen_symbol;
    if (j >= 2) os << "^" << j;
    first = false;
  }
  if (first) os << "0";
  os << " + O(pi^" << prec_ << ")";
  return os.str();
}

// ---- constructors ----

DyadicElt dy_from_rational(const DyadicField& K, const Rational& r, int prec) {
  if (prec <= 0) prec = dy_default_prec();
  long vl = (r == 0) ? prec : (long)K.e * rat_val2(r);
  return DyadicElt(&K, RatPoly{r}, prec, vl);
}

DyadicElt dy_from_global(const NFElement& x, const DyadicField& K, int prec) {
  if (prec <= 0) prec = dy_default_prec();
  NFElement y = embed_to(x, *K.global);
  auto v = rep_val(K, y.coeffs());
  return DyadicElt(&K, y.coeffs(), prec, v ? *v : prec);
}

DyadicElt dy_pi(const DyadicField& K, int prec) {
  if (prec <= 0) prec = dy_default_prec();
  return DyadicElt(&K, K.pi, prec, 1);
}

DyadicElt dy_one(const DyadicField& K, int prec) {
  if (prec <= 0) prec = dy_default_prec();
  return DyadicElt(&K, RatPoly{Rational(1)}, prec, 0);
}

// ---- valuation ----

long dy_val(const DyadicElt& x) {
  auto v = rep_val(*x.field(), x.coeffs());
  if (!v || *v >= x.prec())
    throw dy_precision_error("valuation undecidable at precision O(pi^" +
                             std::to_string(x.prec()) + ")");
  return *v;
}

bool dy_val_at_least(const DyadicElt& x, long bound) {
  if (x.prec() < bound)
    throw dy_precision_error("dy_val_at_least: insufficient precision");
  auto v = rep_val(*x.field(), x.coeffs());
  return !v || *v >= bound;
}

DyadicElt dy_unit_part(const DyadicElt& x) {
  long v = dy_val(x);
  return x * dy_pi(*x.field(), (int)x.prec() + (int)std::abs(v) + 4).pow(-v);
}

void dy_refresh_vlow(DyadicElt& x) {
  auto v = rep_val(*x.field(), x.coeffs());
  long vl = v ? std::min(*v, x.prec()) : x.prec();
  x = DyadicElt(x.field(), x.coeffs(), x.prec(), vl);
}

// ---- embeddings ----

namespace {

struct EmbedData {
  RatMatrix E;                  // big.deg x sub.deg, columns = embed(gen_sub^j)
  std::vector<int> pivot_rows;  // sub.deg independent rows
  RatMatrix S_inv;              // inverse of the pivot-row square block
  long slack = 0;               // precision lost solving through S_inv (pi units)
};

const EmbedData& embed_data(const DyadicField& big, const DyadicField& sub) {
  static std::map<std::pair<FieldId, FieldId>, EmbedData> cache;
  auto key = std::make_pair(big.id, sub.id);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  if (!has_embedding(sub.id, big.id))
    throw std::domain_error("no dyadic embedding " + sub.label + " -> " + big.label);
  EmbedData d;
  int n = big.deg, m = sub.deg;
  d.E.assign(n, std::vector<Rational>(m, Rational(0)));
  NFElement pw = sub.global->one();
  for (int j = 0; j < m; ++j) {
    NFElement img = embed_to(pw, *big.global);
    for (int r = 0; r < n; ++r) d.E[r][j] = img.coeffs()[r];
    pw = pw * sub.global->gen();
  }
  // Pivot rows by exact elimination.
  RatMatrix W = d.E;
  std::vector<int> rows(n);
  for (int r = 0; r < n; ++r) rows[r] = r;
  int rank = 0;
  for (int col = 0; col < m; ++col) {
    int p = -1;
    for (int r = rank; r < n; ++r)
      if (W[r][col] != 0) { p = r; break; }
    if (p < 0) throw std::logic_error("embed_data: rank deficient");
    std::swap(W[p], W[rank]);
    std::swap(rows[p], rows[rank]);
    for (int r = rank + 1; r < n; ++r) {
      if (W[r][col] == 0) continue;
      Rational f = W[r][col] / W[rank][col];
      for (int c = col; c < m; ++c) W[r][c] -= f * W[rank][c];
    }
    ++rank;
  }
  d.pivot_rows.assign(rows.begin(), rows.begin() + m);
  RatMatrix S(m, std::vector<Rational>(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) S[r][c] = d.E[d.pivot_rows[r]][c];
  d.S_inv = mat_inverse(S);
  // Coordinate noise of magnitude O(2^-k) in x is amplified by the 2-power
  // denominators of S_inv (and of E on the way back), so the residual of a
  // genuine subfield element is only guaranteed down to prec - slack.
  long amp = 0;
  for (const auto& mat : {std::cref(d.S_inv), std::cref(d.E)}) {
    long worst = 0;
    for (const auto& row : mat.get())
      for (const Rational& q : row)
        if (q != 0) worst = std::min(worst, rat_val2(q));
    amp += -worst;
  }
  d.slack = amp * big.deg;
  return cache.emplace(key, std::move(d)).first->second;
}

}  // namespace

DyadicElt dy_embed(const DyadicElt& x, const DyadicField& L) {
  if (x.field()->id == L.id) return x;
  int ratio = L.e / x.field()->e;
  NFElement g = x.field()->global->element(x.coeffs());
  NFElement y = embed_to(g, *L.global);
  return DyadicElt(&L, y.coeffs(), x.prec() * ratio, x.vlow() * ratio);
}

std::optional<DyadicElt> dy_descend(const DyadicElt& x, const DyadicField& B) {
  if (x.field()->id == B.id) return x;
  const DyadicField& big = *x.field();
  const EmbedData& d = embed_data(big, B);
  std::vector<Rational> rhs(B.deg);
  for (int r = 0; r < B.deg; ++r) rhs[r] = x.coeffs()[d.pivot_rows[r]];
  auto c = mat_apply(d.S_inv, rhs);
  // Residual over all coordinates must vanish to x's precision.
  std::vector<Rational> resid = x.coeffs();
  for (int r = 0; r < big.deg; ++r)
    for (int j = 0; j < B.deg; ++j) resid[r] -= d.E[r][j] * c[j];
  long bound = x.prec() - d.slack;
  if (bound <= 0) return std::nullopt;  // too coarse to certify membership
  DyadicElt rres(&big, resid, x.prec(), 0);
  if (!dy_val_at_least(rres, bound)) return std::nullopt;
  int ratio = big.e / B.e;
  long pB = bound / ratio;
  long vB = x.vlow() >= 0 ? (x.vlow() + ratio - 1) / ratio
                          : -((-x.vlow()) / ratio);
  return DyadicElt(&B, std::move(c), pB, vB);
}

std::vector<Integer> dy_residue_key(const DyadicElt& x, int m) {
  const DyadicField& K = *x.field();
  if (x.prec() < m) throw dy_precision_error("residue key: insufficient precision");
  auto coords = mat_apply(K.to_pi, padded(x.coeffs(), K.deg));
  int q = m / K.deg, r = m % K.deg;
  std::vector<Integer> key(K.deg);
  for (int j = 0; j < K.deg; ++j) key[j] = coeff_mod_pow2(coords[j], q + (j < r ? 1 : 0));
  return key;
}

// ---- roots ----

namespace {

// Residues of square roots of the unit u modulo pi^(2e+1), found by a
// digit BFS sound against the ultrametric window of squaring.
std::vector<DyadicElt> sqrt_residues(const DyadicElt& u) {
  const DyadicField& K = *u.field();
  int e = K.e, M0 = 2 * e + 1;
  std::vector<DyadicElt> pip(M0 + 1, dy_one(K, (int)u.prec()));
  for (int j = 1; j <= M0; ++j) pip[j] = pip[j - 1] * dy_pi(K, (int)u.prec());
  std::vector<DyadicElt> cands{dy_one(K, (int)u.prec())};
  for (int k = 0; k < M0; ++k) {
    // candidates are defined mod pi^(k+1)
    long thr = std::min<long>(M0, (k + 1) + std::min(e, k + 1));
    std::vector<DyadicElt> next;
    for (const auto& x : cands) {
      for (int a = 0; a < (k == 0 ? 1 : 2); ++a) {
        DyadicElt y = (a && k > 0) ? x + pip[k] : x;
        if (dy_val_at_least(y * y - u, thr)) next.push_back(y);
      }
    }
    cands = std::move(next);
    if (cands.empty()) return {};
  }
  return cands;
}

DyadicElt newton_sqrt(const DyadicElt& u, DyadicElt x) {
  long target = u.prec();
  for (int it = 0; it < 200; ++it) {
    DyadicElt r = x * x - u;
    dy_refresh_vlow(r);
    if (r.rep_is_zero() || r.vlow() >= std::min(target, r.prec())) break;
    x = x - r * (x + x).inverse();
  }
  return x;
}

long val_capped(const DyadicElt& x) {
  auto v = rep_val(*x.field(), x.coeffs());
  return v ? std::min(*v, x.prec()) : x.prec();
}

// Canonical choice among unit roots: maximal val(r-1), ties by residue key.
DyadicElt pick_canonical(std::vector<DyadicElt> roots) {
  const DyadicField& K = *roots[0].field();
  int M0 = 2 * K.e + 1;
  DyadicElt one = dy_one(K, (int)roots[0].prec());
  auto better = [&](const DyadicElt& a, const DyadicElt& b) {
    long va = val_capped(a - one), vb = val_capped(b - one);
    if (va != vb) return va > vb;
    return dy_residue_key(a, M0) < dy_residue_key(b, M0);
  };
  DyadicElt best = roots[0];
  for (size_t i = 1; i < roots.size(); ++i)
    if (better(roots[i], best)) best = roots[i];
  return best;
}

bool unit_is_square(const DyadicElt& u) { return !sqrt_residues(u).empty(); }

std::vector<DyadicElt> unit_sqrts(const DyadicElt& u) {
  auto res = sqrt_residues(u);
  if (res.empty()) return {};
  DyadicElt r = newton_sqrt(u, res[0]);
  return {r, -r};
}

}  // namespace

std::optional<DyadicElt> dy_nth_root(const DyadicElt& c, int n) {
  if (n != 2 && n != 4) throw std::invalid_argument("dy_nth_root: n must be 2 or 4");
  const DyadicField& K = *c.field();
  long v = dy_val(c);
  if (((v % n) + n) % n != 0) return std::nullopt;
  DyadicElt u = c * dy_pi(K, (int)c.prec() + (int)std::abs(v) + 4).pow(-v);
  std::vector<DyadicElt> roots;
  if (n == 2) {
    roots = unit_sqrts(u);
  } else {
    auto inner = unit_sqrts(u);
    for (const auto& s : inner) {
      auto r = unit_sqrts(s);
      roots.insert(roots.end(), r.begin(), r.end());
    }
  }
  if (roots.empty()) return std::nullopt;
  DyadicElt best = pick_canonical(std::move(roots));
  return best * dy_pi(K, (int)c.prec() + (int)std::abs(v) + 4).pow(v / n);
}

bool dy_is_square(const DyadicElt& c) {
  long v = dy_val(c);
  if (v % 2 != 0) return false;
  return unit_is_square(dy_unit_part(c));
}

DyadicElt dy_square_class(const DyadicElt& c) {
  const DyadicField& K = *c.field();
  if (K.deg > 4) throw std::domain_error("dy_square_class: field too large");
  int e = K.e;
  long v = dy_val(c);
  DyadicElt u = dy_unit_part(c);
  int P = dy_default_prec();
  std::vector<DyadicElt> pip(2 * e + 1, dy_one(K, P));
  for (int j = 1; j <= 2 * e; ++j) pip[j] = pip[j - 1] * dy_pi(K, P);
  for (unsigned mask = 0; mask < (1u << (2 * e)); ++mask) {
    DyadicElt r = dy_one(K, P);
    for (int j = 1; j <= 2 * e; ++j)
      if (mask & (1u << (j - 1))) r = r + pip[j];
    if (unit_is_square(u * r.inverse()))
      return (((v % 2) + 2) % 2) ? r * dy_pi(K, P) : r;
  }
  throw std::logic_error("dy_square_class: enumeration exhausted");
}

bool dy_same_square_class(const DyadicElt& a, const DyadicElt& b) {
  long va = dy_val(a), vb = dy_val(b);
  if (((va - vb) % 2 + 2) % 2 != 0) return false;
  return unit_is_square(dy_unit_part(a) * dy_unit_part(b).inverse());
}

// ---- Hilbert symbols ----

namespace {

int odd_mod8(const Rational& u) {
  Integer num = u.get_num(), den = u.get_den();
  Integer m8(8), dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), m8.get_mpz_t()) == 0)
    throw std::invalid_argument("odd_mod8: even denominator");
  Integer r = (num % m8) * dinv % m8;
  if (r < 0) r += m8;
  return (int)r.get_si();
}

int eps2(int u8) { return (u8 % 4 == 1) ? 0 : 1; }           // (u-1)/2 mod 2
int omega2(int u8) { return (u8 == 1 || u8 == 7) ? 0 : 1; }  // (u^2-1)/8 mod 2

}  // namespace

InvValue hilbert_q2(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_q2: zero argument");
  long alpha = rat_val2(a), beta = rat_val2(b);
  Rational u = a / rat_pow(Rational(2), alpha), v = b / rat_pow(Rational(2), beta);
  int u8 = odd_mod8(u), v8 = odd_mod8(v);
  int h = eps2(u8) * eps2(v8) + (int)(alpha % 2 + 2) % 2 * omega2(v8) +
          (int)(beta % 2 + 2) % 2 * omega2(u8);
  return {h % 2};
}

InvValue hilbert_bruteforce(const DyadicElt& a0, const DyadicElt& b0) {
  const DyadicField& K = *a0.field();
  if (K.deg > 4) throw std::domain_error("hilbert_bruteforce: field too large");
  int e = K.e;
  auto normalize = [&](const DyadicElt& x) {
    long v = dy_val(x);
    long half = (v - ((v % 2 + 2) % 2)) / 2;
    return x * dy_pi(K, (int)x.prec() + (int)std::abs(v) + 4).pow(-2 * half);
  };
  DyadicElt a = normalize(a0), b = normalize(b0);
  int m = 2 * e + 1 + (int)dy_val(a) + (int)dy_val(b);
  int h = std::max(m - e, (m + 1) / 2);
  int P = std::max(dy_default_prec(), m + 4);
  std::vector<DyadicElt> pip(h, dy_one(K, P));
  for (int j = 1; j < h; ++j) pip[j] = pip[j - 1] * dy_pi(K, P);

  unsigned count = 1u << h;
  std::vector<DyadicElt> res;
  res.reserve(count);
  for (unsigned mask = 0; mask < count; ++mask) {
    DyadicElt x = dy_from_rational(K, Rational(0), P);
    for (int j = 0; j < h; ++j)
      if (mask & (1u << j)) x = x + pip[j];
    res.push_back(x);
  }
  std::set<std::vector<Integer>> squares;
  for (const auto& z : res) squares.insert(dy_residue_key(z * z, m));
  std::vector<DyadicElt> ax(count, res[0]), by(count, res[0]);
  for (unsigned i = 0; i < count; ++i) {
    ax[i] = a * (res[i] * res[i]);
    by[i] = b * (res[i] * res[i]);
  }
  for (unsigned i = 0; i < count; ++i) {
    bool xu = (i & 1u) != 0;
    for (unsigned j = 0; j < count; ++j) {
      if (i == 0 && j == 0) continue;
      bool yu = (j & 1u) != 0;
      auto key = dy_residue_key(ax[i] + by[j], m);
      if (!squares.count(key)) continue;
      bool zu = (key[0] % 2) != 0;  // unit value => unit square root
      if (xu || yu || zu) return {0};
    }
  }
  return {1};
}

InvValue hilbert_bruteforce_q2(const Rational& a, const Rational& b) {
  return hilbert_bruteforce(dy_from_rational(dyQ2(), a), dy_from_rational(dyQ2(), b));
}

CoresQuad cores_quad(const Rational& d, const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::invalid_argument("cores_quad: zero coefficient");
  Rational n = a * a - d * b * b;
  if (n == 0) throw std::invalid_argument("cores_quad: degenerate norm");
  CoresQuad out;
  out.symbols[0] = {a, -d};
  out.symbols[1] = {-a * b, n};
  return out;
}

InvValue CoresQuad::inv() const {
  return hilbert_q2(symbols[0].first, symbols[0].second) +
         hilbert_q2(symbols[1].first, symbols[1].second);
}

InvValue inv_restrict(InvValue v, int degree) {
  if (degree < 1) throw std::invalid_argument("inv_restrict: degree < 1");
  return {(v.halves * degree) % 2};
}

// ---- relative trace/norm over an index-2 subfield ----

QuadData dy_norm_quad(const DyadicElt& x, const DyadicField& B) {
  const DyadicField& big = *x.field();
  if (big.deg != 2 * B.deg)
    throw std::invalid_argument("dy_norm_quad: subfield index is not 2");
  int n = big.deg, m = B.deg;
  int ratio = big.e / B.e;
  long pB = x.prec() / ratio;
  if (auto down = dy_descend(x, B)) {
    // Degenerate case x in B: X^2 - 2x X + x^2.
    DyadicElt t = *down + *down;
    return {t, (*down) * (*down)};
  }
  const EmbedData& d = embed_data(big, B);
  // Multiplication-by-x matrix on the power basis.
  RatMatrix Mx(n, std::vector<Rational>(n));
  RatPoly xrep = rp_trim(x.coeffs());
  RatPoly pw{Rational(1)};
  for (int j = 0; j < n; ++j) {
    RatPoly col = rp_mod(rp_mul(xrep, pw), big.min_poly);
    auto cc = padded(col, n);
    for (int r = 0; r < n; ++r) Mx[r][j] = cc[r];
    pw = rp_mod(rp_mul(pw, RatPoly{Rational(0), Rational(1)}), big.min_poly);
  }
  RatMatrix MxE = mat_mul(Mx, d.E);
  // Solve [Mx*E | -E] (tc, nc) = coords(x^2) exactly.
  RatMatrix A(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) A[r][c] = MxE[r][c];
    for (int c = 0; c < m; ++c) A[r][m + c] = -d.E[r][c];
  }
  DyadicElt x2 = x * x;
  auto sol = mat_apply(mat_inverse(A), padded(x2.coeffs(), n));
  std::vector<Rational> tc(sol.begin(), sol.begin() + m);
  std::vector<Rational> nc(sol.begin() + m, sol.end());
  // Solving through A^{-1} amplifies the O(pi^p) noise of x^2 by
  // 1/(x - conj x): trace error >= p - w, norm error >= p - w + v(x),
  // with w = val(x - conj x) = val(2x - trace).
  auto mk = [&](std::vector<Rational> v, long p) {
    auto vl = rep_val(B, v);
    return DyadicElt(&B, std::move(v), p, vl ? std::min(*vl, p) : p);
  };
  DyadicElt t_raw = mk(std::move(tc), pB);
  DyadicElt disc = x + x - dy_embed(t_raw, big);
  auto wv = rep_val(big, disc.coeffs());
  long w = wv ? std::min(*wv, x.prec()) : x.prec();
  long vx = dy_val(x);
  long pT = (x.prec() - w) / ratio;
  long pN = std::min(x.prec(), x.prec() - w + vx) / ratio;
  if (pT <= 0 || pN <= 0)
    throw dy_precision_error("dy_norm_quad: precision exhausted by ramification");
  QuadData out{DyadicElt(&B, t_raw.coeffs(), pT, t_raw.vlow()),
               mk(std::move(nc), pN)};
  // Verify the quadratic relation to precision.
  DyadicElt resid = x2 - dy_embed(out.trace, big) * x + dy_embed(out.norm, big);
  if (!dy_val_at_least(resid, resid.prec()))
    throw dy_precision_error("dy_norm_quad: relation fails at precision");
  return out;
}

}  // namespace qb
