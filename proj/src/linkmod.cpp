#include "ade/linkmod.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "ade/ratfunc.hpp"

namespace ade {

namespace {

struct Scan {
  bool ok = false;
  std::vector<long> defects;
  std::vector<LinkState::Arc> arcs;
};

// Classify a role word.  A close at empty stack is queued as the inner end
// of a wrapping arc; wrapping opens are the entries left on the stack at the
// end.  Wraps nest around the dashed segment: the last leftover open pairs
// with the first queued close.
Scan scan_word(long n, const std::vector<uint8_t>& role) {
  Scan s;
  if (static_cast<long>(role.size()) != n) return s;
  std::vector<long> stack, queued;
  for (long i = 0; i < n; ++i) {
    switch (role[i]) {
      case 0:
        if (!stack.empty()) return s;
        s.defects.push_back(i);
        break;
      case 1:
        stack.push_back(i);
        break;
      case 2:
        if (!stack.empty()) {
          s.arcs.push_back({stack.back(), i, false});
          stack.pop_back();
        } else {
          queued.push_back(i);
        }
        break;
      default:
        return s;
    }
  }
  if (stack.size() != queued.size()) return s;
  if (!s.defects.empty() && !queued.empty() && queued.back() > s.defects.front()) return s;
  if (!s.defects.empty() && !stack.empty() && stack.front() < s.defects.back()) return s;
  long w = static_cast<long>(queued.size());
  for (long t = 0; t < w; ++t) s.arcs.push_back({queued[t], stack[w - 1 - t], true});
  std::sort(s.arcs.begin(), s.arcs.end(),
            [](const LinkState::Arc& a, const LinkState::Arc& b) { return a.i < b.i; });
  s.ok = true;
  return s;
}

Scan scan_checked(const LinkState& u) {
  Scan s = scan_word(u.n, u.role);
  if (!s.ok) throw std::invalid_argument("link state: invalid role word");
  return s;
}

void enum_rec(long n, long two_k, bool disc, long i, long stack, long queued,
              long defects, bool defect_seen, std::vector<uint8_t>& word,
              std::vector<LinkState>& out) {
  if (i == n) {
    if (defects == two_k && stack == queued) out.push_back({n, word});
    return;
  }
  if (defects + (n - i) < two_k) return;
  if (stack == 0 && defects < two_k) {
    word[i] = 0;
    enum_rec(n, two_k, disc, i + 1, stack, queued, defects + 1, true, word, out);
  }
  word[i] = 1;
  enum_rec(n, two_k, disc, i + 1, stack + 1, queued, defects, defect_seen, word, out);
  if (stack > 0) {
    word[i] = 2;
    enum_rec(n, two_k, disc, i + 1, stack - 1, queued, defects, defect_seen, word, out);
  } else if (disc && !defect_seen) {
    word[i] = 2;
    enum_rec(n, two_k, disc, i + 1, stack, queued + 1, defects, defect_seen, word, out);
  }
}

const std::vector<LinkState>& cached_basis(long n, long two_k, bool disc) {
  static std::map<std::tuple<long, long, bool>, std::vector<LinkState>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(n, two_k, disc);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<LinkState> out;
  if (n >= 0 && two_k >= 0 && two_k <= n && (n - two_k) % 2 == 0) {
    std::vector<uint8_t> word(n, 0);
    enum_rec(n, two_k, disc, 0, 0, 0, 0, false, word, out);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

long lookup_index(const std::vector<LinkState>& b, const LinkState& u) {
  auto it = std::lower_bound(b.begin(), b.end(), u);
  if (it == b.end() || *it != u) return -1;
  return it - b.begin();
}

// One diagram applied to one basis state: a monomial
// beta^a alpha^b x^m (target state), or zero when two defects meet.
struct ActionImage {
  bool zero = false;
  LinkState state;
  long beta_pow = 0, alpha_pow = 0, x_pow = 0;
};

ActionImage act_mono(const AffineDiagram& lam, const LinkState& u, bool disc) {
  if (lam.n_in != u.n)
    throw std::invalid_argument("module action: diagram expects size " +
                                std::to_string(lam.n_in) + ", state has size " +
                                std::to_string(u.n));
  if (!disc) {
    if (lam.ncloops != 0)
      throw std::invalid_argument("strip module action: diagram has retained loops");
    for (const auto& [q, s] : lam.link)
      if (s != 0)
        throw std::invalid_argument("strip module action: diagram crosses the dashed segment");
  }
  DiagramProduct prod = compose_diagrams(lam, rep_diagram(u));
  const AffineDiagram& d = prod.d;
  ActionImage img;
  img.beta_pow = prod.beta_loops;
  img.alpha_pow = d.ncloops;
  const long two_k = d.n_in;
  const long m = d.n_out;
  std::vector<uint8_t> role(m, 255);
  long shift_sum = 0;
  for (long t = 0; t < two_k; ++t) {
    auto [q, s] = d.link[m + t];
    if (q >= m) {  // two defects joined
      img.zero = true;
      return img;
    }
    role[q] = 0;
    shift_sum += s;
  }
  img.x_pow = -shift_sum;
  if (two_k > 0 && img.alpha_pow != 0)
    throw std::logic_error("module action: retained loop beside surviving defects");
  for (long i = 0; i < m; ++i) {
    if (role[i] != 255) continue;
    auto [j, s] = d.link[i];
    if (j < i || j >= m) throw std::logic_error("module action: tangled arc");
    if (s == 0) {
      role[i] = 1;
      role[j] = 2;
    } else if (s == -1) {
      role[i] = 2;
      role[j] = 1;
    } else {
      throw std::logic_error("module action: unexpected arc winding");
    }
  }
  img.state = LinkState{m, std::move(role)};
  return img;
}

Scalar beta_at_root(long p, long pp) {
  Scalar q = unit_q(p, pp);
  return -(q + q.inverse());
}

void check_root_data(long p, long pp) {
  if (pp < 2 || p < 1 || p >= pp || std::gcd(p, pp) != 1)
    throw std::invalid_argument("root-of-unity data requires 1 <= p < p' coprime");
}

// ---- symbolic path --------------------------------------------------------
//
// Singular vectors are computed over rational functions of t = sqrt(q), so
// that twists eps q^{sigma s} with half-integer s stay rational, and only
// specialized at t = e^{-i pi p/(2p')} once fully assembled.  Reduced
// fractions make the specialization safe wherever the limit exists.

struct SymCtx {
  long two_k = 0;
  bool disc = true;
  RatFunc x, beta, alpha;
};

struct SymVecN {
  long n = 0;
  std::vector<RatFunc> c;
};

SymVecN act_sym(const AffineDiagram& dg, const SymVecN& v, const SymCtx& cx) {
  const auto& src = cached_basis(v.n, cx.two_k, cx.disc);
  const auto& dst = cached_basis(dg.n_out, cx.two_k, cx.disc);
  SymVecN out{dg.n_out, std::vector<RatFunc>(dst.size())};
  for (size_t i = 0; i < src.size(); ++i) {
    if (v.c[i].is_zero()) continue;
    ActionImage img = act_mono(dg, src[i], cx.disc);
    if (img.zero) continue;
    RatFunc val = v.c[i];
    if (img.beta_pow != 0) val = val * cx.beta.pow(img.beta_pow);
    if (img.alpha_pow != 0) val = val * cx.alpha.pow(img.alpha_pow);
    if (img.x_pow != 0) val = val * cx.x.pow(img.x_pow);
    long t = lookup_index(dst, img.state);
    if (t < 0) throw std::logic_error("module action: image outside basis");
    out.c[t] += val;
  }
  return out;
}

RatFunc qnum_t(long m) {  // [m]_q with q = t^2
  RatFunc q = RatFunc::variable() * RatFunc::variable();
  return (q.pow(m) - q.pow(-m)) / (q - q.inverse());
}

// Apply the two-sided idempotent word on strands 1..nstr through the
// recursion P_{n+1} = P_n + ([n]/[n+1]) P_n e_n P_n.
SymVecN jw_apply(long nstr, const SymVecN& v, const SymCtx& cx) {
  if (nstr <= 1) return v;
  SymVecN w = jw_apply(nstr - 1, v, cx);
  SymVecN u = act_sym(diag_e(v.n, nstr - 1), w, cx);
  u = jw_apply(nstr - 1, u, cx);
  RatFunc coef = qnum_t(nstr - 1) / qnum_t(nstr);
  for (size_t i = 0; i < w.c.size(); ++i) w.c[i] += coef * u.c[i];
  return w;
}

ModuleVec evaluate_sym(const SymVecN& v, const ModuleSpec& spec, long p, long pp) {
  Scalar th = unit_q_half(p, pp);
  ModuleVec out = zero_vec(spec);
  if (out.c.size() != v.c.size())
    throw std::logic_error("singular vector: basis size mismatch");
  for (size_t i = 0; i < v.c.size(); ++i) out.c[i] = v.c[i].evaluate(th);
  return out;
}

// ---- relation spaces ------------------------------------------------------

class Echelon {
 public:
  bool insert(std::vector<Scalar> v) {
    reduce(v);
    long piv = -1;
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return false;
    Scalar inv = v[piv].inverse();
    for (auto& e : v) e = e * inv;
    for (size_t r = 0; r < rows_.size(); ++r) {
      Scalar f = rows_[r][piv];
      if (f.is_zero()) continue;
      for (size_t i = 0; i < v.size(); ++i) rows_[r][i] = rows_[r][i] - f * v[i];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  void reduce(std::vector<Scalar>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      Scalar f = v[pivots_[r]];
      if (f.is_zero()) continue;
      for (size_t i = 0; i < v.size(); ++i) v[i] = v[i] - f * rows_[r][i];
    }
  }

  long rank() const { return rows_.size(); }

 private:
  std::vector<std::vector<Scalar>> rows_;
  std::vector<long> pivots_;
};

// x = eps q^{sigma s} with k < s <= p'/2 and s - k integral?
bool detect_twist(const ModuleSpec& sp, int* sigma, long* two_s, int* eps) {
  Scalar th = unit_q_half(sp.p, sp.pp);
  for (long ts = sp.two_k + 2; ts <= sp.pp; ts += 2)
    for (int sg : {+1, -1})
      for (int ep : {+1, -1})
        if (sp.x == Scalar(ep) * th.pow(sg * ts)) {
          *sigma = sg;
          *two_s = ts;
          *eps = ep;
          return true;
        }
  return false;
}

std::shared_ptr<const Echelon> relation_space(const ModuleSpec& qspec) {
  static std::map<std::string, std::shared_ptr<const Echelon>> cache;
  static std::mutex mu;
  std::string key = qspec.to_string();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto ech = std::make_shared<Echelon>();
  std::vector<ModuleVec> gens;
  if (qspec.kind == ModuleKind::kQuotientV) {
    if ((qspec.two_k + 1) % qspec.pp != 0)
      gens.push_back(v_state_strip(qspec.two_k, qspec.p, qspec.pp));
  } else if (qspec.kind == ModuleKind::kQuotientW) {
    int sigma = 0, eps = 0;
    long two_s = 0;
    if (detect_twist(qspec, &sigma, &two_s, &eps)) {
      gens.push_back(v_state_disc(qspec.two_k, two_s, sigma, eps, qspec.p, qspec.pp));
      long two_sp = 2 * qspec.pp - two_s;
      int epsp = (qspec.p % 2 == 0) ? eps : -eps;
      gens.push_back(v_state_disc(qspec.two_k, two_sp, -sigma, epsp, qspec.p, qspec.pp));
    }
  } else {
    throw std::invalid_argument("relation space: spec is not a quotient");
  }
  for (const ModuleVec& g : gens) {
    if (g.spec.n > qspec.n) continue;
    if (g.spec.w_like() && g.spec.x != qspec.x)
      throw std::logic_error("relation space: generator twist mismatch");
    // the submodule generated by g is spanned by the images of the
    // representative diagrams of the basis at the quotient's size
    for (const LinkState& b : cached_basis(qspec.n, g.spec.n, qspec.w_like())) {
      ModuleVec img = act(rep_diagram(b), g);
      ech->insert(img.c);
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(ech)).first->second;
}

bool proportional(const ModuleVec& w, const ModuleVec& v) {
  long lead = -1;
  for (size_t i = 0; i < v.c.size(); ++i)
    if (!v.c[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) return w.is_zero();
  Scalar ratio = w.c[lead] / v.c[lead];
  return w == v * ratio;
}

}  // namespace

// ---- LinkState -------------------------------------------------------------

long LinkState::defect_count() const {
  return std::count(role.begin(), role.end(), uint8_t{0});
}

std::vector<long> LinkState::defect_positions() const { return scan_checked(*this).defects; }

std::vector<LinkState::Arc> LinkState::arcs() const { return scan_checked(*this).arcs; }

bool LinkState::valid(bool allow_crossing) const {
  Scan s = scan_word(n, role);
  if (!s.ok) return false;
  if (!allow_crossing)
    for (const Arc& a : s.arcs)
      if (a.crosses) return false;
  return true;
}

std::string LinkState::to_string() const {
  static const char sym[3] = {'|', '(', ')'};
  std::string out;
  out.reserve(role.size());
  for (uint8_t r : role) out.push_back(r <= 2 ? sym[r] : '?');
  return out;
}

LinkState LinkState::parse(const std::string& text) {
  LinkState u;
  u.n = static_cast<long>(text.size());
  for (char ch : text) {
    switch (ch) {
      case '|': u.role.push_back(0); break;
      case '(': u.role.push_back(1); break;
      case ')': u.role.push_back(2); break;
      default:
        throw std::invalid_argument("link state: unexpected character in \"" + text + "\"");
    }
  }
  if (!u.valid()) throw std::invalid_argument("link state: invalid word \"" + text + "\"");
  return u;
}

AffineDiagram rep_diagram(const LinkState& u) {
  Scan s = scan_checked(u);
  const long two_k = static_cast<long>(s.defects.size());
  AffineDiagram d;
  d.n_out = u.n;
  d.n_in = two_k;
  d.link.assign(u.n + two_k, {-1, 0});
  for (long m = 0; m < two_k; ++m) {
    d.link[s.defects[m]] = {u.n + m, 0};
    d.link[u.n + m] = {s.defects[m], 0};
  }
  for (const LinkState::Arc& a : s.arcs) {
    long w = a.crosses ? -1 : 0;
    d.link[a.i] = {a.j, w};
    d.link[a.j] = {a.i, -w};
  }
  return d;
}

// ---- ModuleSpec ------------------------------------------------------------

ModuleSpec ModuleSpec::standard_v(long two_k, const Scalar& beta, long n) {
  if (two_k < 0) throw std::invalid_argument("strip module: negative defect number");
  if (n < 0 || (n - two_k) % 2 != 0)
    throw std::invalid_argument("strip module: size and defect number of different parity");
  ModuleSpec sp;
  sp.kind = ModuleKind::kStandardV;
  sp.two_k = two_k;
  sp.n = n;
  sp.beta = beta;
  return sp;
}

ModuleSpec ModuleSpec::twisted_w(long two_k, const Scalar& x, const Scalar& beta, long n) {
  if (x.is_zero()) throw std::invalid_argument("twisted module: twist must be invertible");
  ModuleSpec sp;
  sp.kind = ModuleKind::kTwistedW;
  sp.two_k = two_k < 0 ? -two_k : two_k;
  sp.x = two_k < 0 ? x.inverse() : x;
  sp.beta = beta;
  sp.n = n;
  if (n < 0 || (n - sp.two_k) % 2 != 0)
    throw std::invalid_argument("twisted module: size and defect number of different parity");
  return sp;
}

ModuleSpec ModuleSpec::quotient_v(long two_k, long p, long pp, long n) {
  check_root_data(p, pp);
  ModuleSpec sp = standard_v(two_k, beta_at_root(p, pp), n);
  sp.kind = ModuleKind::kQuotientV;
  sp.p = p;
  sp.pp = pp;
  return sp;
}

ModuleSpec ModuleSpec::quotient_w(long two_k, const Scalar& x, long p, long pp, long n) {
  check_root_data(p, pp);
  ModuleSpec sp = twisted_w(two_k, x, beta_at_root(p, pp), n);
  sp.kind = ModuleKind::kQuotientW;
  sp.p = p;
  sp.pp = pp;
  return sp;
}

ModuleSpec ModuleSpec::quotient_w(long two_k, int eps, long two_s, long p, long pp, long n) {
  if (eps != 1 && eps != -1) throw std::invalid_argument("twist sign must be +1 or -1");
  check_root_data(p, pp);
  Scalar x = Scalar(eps) * unit_q_half(p, pp).pow(two_s);
  return quotient_w(two_k, x, p, pp, n);
}

ModuleSpec ModuleSpec::parent() const {
  ModuleSpec sp = *this;
  if (kind == ModuleKind::kQuotientV) sp.kind = ModuleKind::kStandardV;
  if (kind == ModuleKind::kQuotientW) sp.kind = ModuleKind::kTwistedW;
  return sp;
}

ModuleSpec ModuleSpec::at_size(long m) const {
  ModuleSpec sp = *this;
  sp.n = m;
  if (m < 0 || (m - two_k) % 2 != 0)
    throw std::invalid_argument("module spec: size and defect number of different parity");
  return sp;
}

bool ModuleSpec::operator==(const ModuleSpec& o) const {
  return kind == o.kind && two_k == o.two_k && n == o.n && x == o.x && beta == o.beta &&
         p == o.p && pp == o.pp;
}

std::string ModuleSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case ModuleKind::kStandardV: os << "V"; break;
    case ModuleKind::kTwistedW: os << "W"; break;
    case ModuleKind::kQuotientV: os << "QV"; break;
    case ModuleKind::kQuotientW: os << "QW"; break;
  }
  os << "[2k=" << two_k << ",n=" << n;
  if (w_like()) os << ",x=" << x.to_string();
  os << ",beta=" << beta.to_string();
  if (quotient()) os << ",p=" << p << "/" << pp;
  os << "]";
  return os.str();
}

Scalar unit_q(long p, long pp) {
  check_root_data(p, pp);
  return root_of_unity(2 * pp, ((-p) % (2 * pp) + 2 * pp) % (2 * pp));
}

Scalar unit_q_half(long p, long pp) {
  check_root_data(p, pp);
  return root_of_unity(4 * pp, ((-p) % (4 * pp) + 4 * pp) % (4 * pp));
}

// ---- dimensions ------------------------------------------------------------

mpz_class dim_d(long two_k, long n) {
  if (two_k < 0 || two_k > n || (n - two_k) % 2 != 0) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, (n - two_k) / 2);
  return r;
}

mpz_class dim_bigd(long two_k, long n, long pp) {
  mpz_class s = 0;
  for (long t = two_k; t <= n; t += 2 * pp) s += dim_d(t, n);
  return s;
}

mpz_class dim_module(const ModuleSpec& spec) {
  switch (spec.kind) {
    case ModuleKind::kStandardV:
      return dim_d(spec.two_k, spec.n) - dim_d(spec.two_k + 2, spec.n);
    case ModuleKind::kTwistedW:
      return dim_d(spec.two_k, spec.n);
    case ModuleKind::kQuotientV: {
      if ((spec.two_k + 1) % spec.pp == 0) return dim_module(spec.parent());
      long r = spec.two_k / spec.pp + 1;
      long two_kp = 2 * (r * spec.pp - 1) - spec.two_k;
      return dim_bigd(spec.two_k, spec.n, spec.pp) - dim_bigd(spec.two_k + 2, spec.n, spec.pp) -
             dim_bigd(two_kp, spec.n, spec.pp) + dim_bigd(two_kp + 2, spec.n, spec.pp);
    }
    case ModuleKind::kQuotientW: {
      int sigma = 0, eps = 0;
      long two_s = 0;
      if (!detect_twist(spec, &sigma, &two_s, &eps)) return dim_d(spec.two_k, spec.n);
      return dim_bigd(spec.two_k, spec.n, spec.pp) - dim_bigd(two_s, spec.n, spec.pp) -
             dim_bigd(2 * spec.pp - two_s, spec.n, spec.pp) +
             dim_bigd(2 * spec.pp - spec.two_k, spec.n, spec.pp);
    }
  }
  throw std::logic_error("module spec: unknown kind");
}

const std::vector<LinkState>& basis(const ModuleSpec& spec) {
  return cached_basis(spec.n, spec.two_k, spec.w_like());
}

long basis_index(const ModuleSpec& spec, const LinkState& u) {
  return lookup_index(basis(spec), u);
}

// ---- vectors and action ----------------------------------------------------

bool ModuleVec::is_zero() const {
  for (const Scalar& s : c)
    if (!s.is_zero()) return false;
  return true;
}

ModuleVec ModuleVec::operator+(const ModuleVec& o) const {
  if (spec != o.spec) throw std::invalid_argument("module vectors live in different modules");
  ModuleVec out = *this;
  for (size_t i = 0; i < c.size(); ++i) out.c[i] = out.c[i] + o.c[i];
  return out;
}

ModuleVec ModuleVec::operator-(const ModuleVec& o) const {
  if (spec != o.spec) throw std::invalid_argument("module vectors live in different modules");
  ModuleVec out = *this;
  for (size_t i = 0; i < c.size(); ++i) out.c[i] = out.c[i] - o.c[i];
  return out;
}

ModuleVec ModuleVec::operator*(const Scalar& s) const {
  ModuleVec out = *this;
  for (auto& e : out.c) e = e * s;
  return out;
}

bool ModuleVec::operator==(const ModuleVec& o) const { return spec == o.spec && c == o.c; }

ModuleVec zero_vec(const ModuleSpec& spec) {
  return ModuleVec{spec, std::vector<Scalar>(basis(spec).size())};
}

ModuleVec basis_vec(const ModuleSpec& spec, long i) {
  ModuleVec v = zero_vec(spec);
  if (i < 0 || i >= static_cast<long>(v.c.size()))
    throw std::invalid_argument("basis vector index out of range");
  v.c[i] = Scalar(1);
  return v;
}

ModuleVec seed_state(const ModuleSpec& spec) {
  ModuleVec v = zero_vec(spec.at_size(spec.two_k));
  if (v.c.size() != 1) throw std::logic_error("seed state: basis is not a single state");
  v.c[0] = Scalar(1);
  return v;
}

ModuleVec act(const AffineDiagram& d, const ModuleVec& v) {
  return act(DiagramVector(d), v);
}

ModuleVec act(const DiagramVector& lam, const ModuleVec& v) {
  if (lam.is_zero()) throw std::invalid_argument("module action: empty diagram sum");
  long n_out = lam.terms().begin()->first.n_out;
  for (const auto& [d, cd] : lam.terms())
    if (d.n_out != n_out || d.n_in != v.spec.n)
      throw std::invalid_argument("module action: mismatched diagram sizes");
  ModuleSpec target = v.spec.at_size(n_out);
  const auto& src = basis(v.spec);
  const auto& dst = basis(target);
  ModuleVec out = zero_vec(target);
  const bool disc = v.spec.w_like();
  for (const auto& [d, cd] : lam.terms()) {
    for (size_t i = 0; i < src.size(); ++i) {
      if (v.c[i].is_zero()) continue;
      ActionImage img = act_mono(d, src[i], disc);
      if (img.zero) continue;
      Scalar val = cd * v.c[i];
      if (img.beta_pow != 0) val = val * v.spec.beta.pow(img.beta_pow);
      if (img.alpha_pow != 0) val = val * v.spec.alpha().pow(img.alpha_pow);
      if (img.x_pow != 0) val = val * v.spec.x.pow(img.x_pow);
      long t = lookup_index(dst, img.state);
      if (t < 0) throw std::logic_error("module action: image outside basis");
      out.c[t] = out.c[t] + val;
    }
  }
  if (target.quotient()) out = quotient_vector(out, target);
  return out;
}

// ---- singular vectors ------------------------------------------------------

ModuleVec v_state_strip(long two_k, long p, long pp) {
  check_root_data(p, pp);
  if (two_k < 0) throw std::invalid_argument("strip module: negative defect number");
  if ((two_k + 1) % pp == 0)
    throw std::domain_error("strip module is irreducible at this root of unity");
  long r = two_k / pp + 1;
  long two_kp = 2 * (r * pp - 1) - two_k;
  long kk = (two_k + two_kp) / 2;
  SymCtx cx;
  cx.two_k = two_k;
  cx.disc = false;
  RatFunc q = RatFunc::variable() * RatFunc::variable();
  cx.beta = -(q + q.inverse());
  SymVecN v{two_k, {RatFunc(1)}};
  for (long j = two_k + 1; j <= kk; ++j) v = act_sym(diag_cdag(2 * j - two_k, j), v, cx);
  v = jw_apply(kk, v, cx);
  return evaluate_sym(v, ModuleSpec::standard_v(two_k, beta_at_root(p, pp), two_kp), p, pp);
}

ModuleVec v_state_disc(long two_k, long two_s, int sigma, int eps, long p, long pp) {
  check_root_data(p, pp);
  if (two_k < 0) throw std::invalid_argument("twisted module: negative defect number");
  if (two_s <= two_k || (two_s - two_k) % 2 != 0)
    throw std::invalid_argument("singular vector needs s > k with s - k integral");
  if ((sigma != 1 && sigma != -1) || (eps != 1 && eps != -1))
    throw std::invalid_argument("twist signs must be +1 or -1");
  SymCtx cx;
  cx.two_k = two_k;
  cx.disc = true;
  RatFunc t = RatFunc::variable();
  RatFunc q = t * t;
  cx.beta = -(q + q.inverse());
  cx.x = RatFunc(static_cast<long>(eps)) * t.pow(sigma * two_s);
  cx.alpha = cx.x + cx.x.inverse();
  SymVecN v{two_k, {RatFunc(1)}};
  for (long m = two_k; m < two_s; m += 2) v = act_sym(diag_cdag(m + 2, 0), v, cx);
  v = jw_apply(two_s, v, cx);
  Scalar x = Scalar(eps) * unit_q_half(p, pp).pow(sigma * two_s);
  return evaluate_sym(v, ModuleSpec::twisted_w(two_k, x, beta_at_root(p, pp), two_s), p, pp);
}

ModuleVec insertion_map(const ModuleVec& xi, const DiagramVector& lam) {
  const long n0 = xi.spec.n;
  if (xi.spec.w_like()) {
    if (n0 == 0) {
      if (!proportional(act(diag_f(), xi), xi))
        throw std::domain_error("insertion state: not an eigenvector of the marked-point loop");
    } else {
      if (!act(diag_c(n0, 0), xi).is_zero())
        throw std::domain_error("insertion state: not killed by the wrapping contraction");
      if (!proportional(act(diag_omega(n0), xi), xi))
        throw std::domain_error("insertion state: not an eigenvector of the rotation");
    }
  } else {
    for (long j = 1; j < n0; ++j)
      if (!act(diag_c(n0, j), xi).is_zero())
        throw std::domain_error("insertion state: not killed by the contraction at " +
                                std::to_string(j));
  }
  return act(lam, xi);
}

// ---- quotients -------------------------------------------------------------

long relation_rank(const ModuleSpec& qspec) { return relation_space(qspec)->rank(); }

ModuleVec quotient_vector(const ModuleVec& v, const ModuleSpec& qspec) {
  if (!qspec.quotient()) throw std::invalid_argument("quotient reduction: spec is not a quotient");
  // the parent module is determined by kind, defect number, size, twist and
  // loop weight; the root bookkeeping fields only matter for the quotient
  ModuleSpec par = qspec.parent();
  bool parent_ok = v.spec.kind == par.kind && v.spec.two_k == par.two_k && v.spec.n == par.n &&
                   v.spec.beta == par.beta && (!par.w_like() || v.spec.x == par.x);
  if (v.spec != qspec && !parent_ok)
    throw std::invalid_argument("quotient reduction: vector lives in a different module");
  ModuleVec out{qspec, v.c};
  relation_space(qspec)->reduce(out.c);
  return out;
}

}  // namespace ade
