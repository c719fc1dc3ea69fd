#include "ade/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <list>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ade {

namespace {

long fdiv(long a, long b) { // floor division, b > 0
  long q = a / b, r = a % b;
  return (r != 0 && r < 0) ? q - 1 : q;
}
long fmod_(long a, long b) { return a - fdiv(a, b) * b; }

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

} // namespace

long AffineDiagram::bridges() const {
  long b = 0;
  for (int p = 0; p < n_out; ++p)
    if (is_inner(link[p].first)) ++b;
  return b;
}

bool AffineDiagram::valid() const {
  if ((long)link.size() != points()) return false;
  if ((n_out - n_in) % 2 != 0) return false;
  if (ncloops < 0) return false;
  if (ncloops > 0 && bridges() > 0) return false;
  for (int p = 0; p < points(); ++p) {
    auto [q, s] = link[p];
    if (q < 0 || q >= points() || q == p) return false;
    if (link[q] != std::make_pair(p, -s)) return false;
  }
  return true;
}

AffineDiagram AffineDiagram::dagger() const {
  AffineDiagram d;
  d.n_out = n_in;
  d.n_in = n_out;
  d.ncloops = ncloops;
  d.link.resize(points());
  auto flip = [&](int p) { return p < n_out ? (int)(p + n_in) : (int)(p - n_out); };
  for (int p = 0; p < points(); ++p) {
    auto [q, s] = link[p];
    d.link[flip(p)] = {flip(q), s};
  }
  return d;
}

namespace {

struct CoverArc {
  bool bridge;    // connects the two boundaries
  int side;       // for arches: 0 = outer, 1 = inner
  long a, b;      // bridge: a = outer position, b = inner position
};                // arch: interval a < b on `side`

// common angular coordinate: outer node i at (2i+1)*max(1,n_in), inner node j
// at (2j+1)*max(1,n_out); one full turn is T
struct Lift {
  long T = 0;
  long smax = 0;
  std::vector<CoverArc> arcs;
};

Lift lift_arcs(const AffineDiagram& d) {
  Lift L;
  long uo = std::max(1L, d.n_in), ui = std::max(1L, d.n_out);
  L.T = 2 * std::max(1L, d.n_out) * std::max(1L, d.n_in);
  auto pos = [&](int p, long s) {
    return d.is_inner(p) ? (2 * (p - d.n_out) + 1) * ui + s * L.T
                         : (2 * p + 1) * uo + s * L.T;
  };
  for (int p = 0; p < d.points(); ++p) {
    auto [q, s] = d.link[p];
    if (q < p) continue; // each arc once, from its smaller endpoint
    L.smax = std::max(L.smax, std::labs(s));
    CoverArc c;
    long x = pos(p, 0), y = pos(q, s);
    if (d.is_inner(p) != d.is_inner(q)) {
      c.bridge = true;
      c.side = -1;
      c.a = d.is_inner(p) ? y : x; // outer endpoint
      c.b = d.is_inner(p) ? x : y; // inner endpoint
    } else {
      c.bridge = false;
      c.side = d.is_inner(p) ? 1 : 0;
      c.a = std::min(x, y);
      c.b = std::max(x, y);
    }
    L.arcs.push_back(c);
  }
  return L;
}

bool arcs_cross(const CoverArc& A, const CoverArc& B) {
  if (A.bridge && B.bridge)
    return (A.a < B.a) != (A.b < B.b);
  if (A.bridge != B.bridge) {
    const CoverArc& br = A.bridge ? A : B;
    const CoverArc& ar = A.bridge ? B : A;
    long w = ar.side == 0 ? br.a : br.b;
    return ar.a < w && w < ar.b;
  }
  if (A.side != B.side) return false;
  return (A.a < B.a && B.a < A.b && A.b < B.b) ||
         (B.a < A.a && A.a < B.b && B.b < A.b);
}

} // namespace

bool AffineDiagram::is_planar() const {
  if (!valid()) return false;
  Lift L = lift_arcs(*this);
  long R = L.smax + 2;
  for (size_t i = 0; i < L.arcs.size(); ++i)
    for (size_t j = i; j < L.arcs.size(); ++j)
      for (long t = -R; t <= R; ++t) {
        if (i == j && t == 0) continue;
        CoverArc B = L.arcs[j];
        B.a += t * L.T;
        B.b += t * L.T;
        if (arcs_cross(L.arcs[i], B)) return false;
      }
  return true;
}

std::string AffineDiagram::to_string() const {
  std::ostringstream os;
  auto pname = [&](int p) {
    return (p < n_out ? "o" + std::to_string(p) : "i" + std::to_string(p - n_out));
  };
  os << n_out << ";" << n_in << ";";
  bool first = true;
  for (int p = 0; p < points(); ++p) {
    auto [q, s] = link[p];
    if (q < p) continue;
    if (!first) os << ",";
    first = false;
    os << pname(p) << "-" << pname(q) << ":" << s;
  }
  os << ";" << ncloops;
  return os.str();
}

AffineDiagram AffineDiagram::parse(const std::string& text) {
  AffineDiagram d;
  std::istringstream is(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(is, part, ';')) parts.push_back(part);
  if (parts.size() == 3 && text.back() == ';') parts.push_back("");
  if (parts.size() != 4) bad("diagram text must have four ';' fields");
  d.n_out = std::stol(parts[0]);
  d.n_in = std::stol(parts[1]);
  d.ncloops = std::stol(parts[3]);
  d.link.assign(d.points(), {-1, 0});
  auto point = [&](const std::string& t) -> int {
    if (t.size() < 2 || (t[0] != 'o' && t[0] != 'i')) bad("bad point name " + t);
    long idx = std::stol(t.substr(1));
    long n = t[0] == 'o' ? d.n_out : d.n_in;
    if (idx < 0 || idx >= n) bad("point out of range " + t);
    return (int)(t[0] == 'o' ? idx : d.n_out + idx);
  };
  if (!parts[2].empty()) {
    std::istringstream as(parts[2]);
    std::string arc;
    while (std::getline(as, arc, ',')) {
      auto dash = arc.find('-', 1);
      auto colon = arc.rfind(':');
      if (dash == std::string::npos || colon == std::string::npos || colon < dash)
        bad("bad arc " + arc);
      int p = point(arc.substr(0, dash));
      int q = point(arc.substr(dash + 1, colon - dash - 1));
      long s = std::stol(arc.substr(colon + 1));
      if (d.link[p].first != -1 || d.link[q].first != -1) bad("point reused in " + arc);
      d.link[p] = {q, s};
      d.link[q] = {p, -s};
    }
  }
  for (int p = 0; p < d.points(); ++p)
    if (d.link[p].first == -1) bad("unmatched point in diagram text");
  if (!d.valid()) bad("diagram text does not define a matching");
  return d;
}

DiagramProduct compose_diagrams(const AffineDiagram& a, const AffineDiagram& b) {
  if (a.n_in != b.n_out)
    bad("compose: inner boundary of left factor has " + std::to_string(a.n_in) +
        " nodes but outer boundary of right factor has " + std::to_string(b.n_out));
  const long N = a.n_out, Nm = a.n_in, Np = b.n_in;
  DiagramProduct out;
  out.d.n_out = N;
  out.d.n_in = Np;
  out.d.link.assign(N + Np, {-1, 0});

  // positions on the glued interface are absolute cover indices; residues are
  // marked as paths consume them
  std::vector<char> seen(std::max(1L, Nm), 0);

  // one step through diagram a from interface cover index x; returns
  // (terminal?, point-or-interface, abs)
  struct Hop { bool terminal; bool to_top; long abs; };
  auto hop_a = [&](long x) -> Hop {
    long r = fmod_(x, Nm), t = fdiv(x, Nm);
    seen[r] = 1;
    auto [q, s] = a.link[N + r];
    if (q < N) return {true, false, q + (t + s) * std::max(1L, N)};
    return {false, false, (q - N) + (t + s) * Nm};
  };
  auto hop_b = [&](long x) -> Hop {
    long r = fmod_(x, Nm), t = fdiv(x, Nm);
    seen[r] = 1;
    auto [q, s] = b.link[r];
    if (q >= Nm) return {true, true, (q - Nm) + (t + s) * std::max(1L, Np)};
    return {false, true, q + (t + s) * Nm};
  };

  auto record = [&](int p, bool end_top, long abs) {
    long per = end_top ? std::max(1L, Np) : std::max(1L, N);
    long r = fmod_(abs, per), s = fdiv(abs, per);
    int q = (int)(end_top ? N + r : r);
    if (out.d.link[p].first != -1 && out.d.link[p] != std::make_pair(q, s))
      throw std::logic_error("compose: inconsistent path tracing");
    out.d.link[p] = {q, s};
  };

  // trace from every terminal point of the glued picture
  for (int p = 0; p < N + Np; ++p) {
    bool from_top = p >= N;
    long abs;
    bool use_a; // which factor provides the next arc
    {
      if (!from_top) {
        auto [q, s] = a.link[p];
        if (q < N) { record(p, false, q + s * std::max(1L, N)); continue; }
        abs = (q - N) + s * Nm;
        use_a = false;
      } else {
        auto [q, s] = b.link[Nm + (p - N)];
        if (q >= Nm) { record(p, true, (q - Nm) + s * std::max(1L, Np)); continue; }
        abs = q + s * Nm;
        use_a = true;
      }
    }
    // an embedded path meets each of the Nm interface nodes at most once
    for (long guard = 0; ; ++guard) {
      if (guard > Nm + 2) throw std::logic_error("compose: runaway path");
      Hop h = use_a ? hop_a(abs) : hop_b(abs);
      if (h.terminal) { record(p, h.to_top, h.abs); break; }
      abs = h.abs;
      use_a = !use_a;
    }
  }

  // leftover interface residues sit on closed loops
  long beta_loops = 0, nc_new = 0;
  for (long r = 0; r < Nm; ++r) {
    if (seen[r]) continue;
    long abs = r;
    bool use_a = true;
    long steps = 0;
    while (true) {
      Hop h = use_a ? hop_a(abs) : hop_b(abs);
      if (h.terminal) throw std::logic_error("compose: loop reached a boundary");
      abs = h.abs;
      use_a = !use_a;
      ++steps;
      if (use_a && fmod_(abs, Nm) == r) break; // closed after an even number of arcs
      if (steps > 4 * Nm + 8) throw std::logic_error("compose: runaway loop");
    }
    if (abs == r) ++beta_loops;
    else ++nc_new;
  }

  out.d.ncloops = a.ncloops + b.ncloops + nc_new;
  out.beta_loops = beta_loops;
  if (!out.d.valid()) throw std::logic_error("compose: result is not a matching");
  return out;
}

DiagramVector::DiagramVector(const AffineDiagram& d, const Scalar& c) {
  add(d, c);
}

void DiagramVector::add(const AffineDiagram& d, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

DiagramVector DiagramVector::operator+(const DiagramVector& o) const {
  DiagramVector r = *this;
  for (auto& [d, c] : o.terms_) r.add(d, c);
  return r;
}

DiagramVector DiagramVector::operator-(const DiagramVector& o) const {
  DiagramVector r = *this;
  for (auto& [d, c] : o.terms_) r.add(d, -c);
  return r;
}

DiagramVector DiagramVector::operator*(const Scalar& c) const {
  DiagramVector r;
  if (c.is_zero()) return r;
  for (auto& [d, x] : terms_) r.add(d, x * c);
  return r;
}

namespace {

// memoized diagram-level products (composition is the hot loop of every
// module action and word evaluation)
class ComposeCache {
 public:
  DiagramProduct get(const AffineDiagram& a, const AffineDiagram& b) {
    std::string key = a.to_string() + "|" + b.to_string();
    {
      std::lock_guard<std::mutex> g(mu_);
      auto it = map_.find(key);
      if (it != map_.end()) {
        order_.splice(order_.begin(), order_, it->second.second);
        return it->second.first;
      }
    }
    DiagramProduct p = compose_diagrams(a, b);
    std::lock_guard<std::mutex> g(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second.first;
    order_.push_front(key);
    map_.emplace(key, std::make_pair(p, order_.begin()));
    if (map_.size() > kCap) {
      map_.erase(order_.back());
      order_.pop_back();
    }
    return p;
  }

 private:
  static constexpr size_t kCap = 1 << 15;
  std::mutex mu_;
  std::list<std::string> order_;
  std::unordered_map<std::string, std::pair<DiagramProduct, std::list<std::string>::iterator>> map_;
};

ComposeCache& cache() {
  static ComposeCache c;
  return c;
}

} // namespace

DiagramVector compose(const DiagramVector& a, const DiagramVector& b,
                      const Scalar& beta) {
  DiagramVector out;
  for (auto& [da, ca] : a.terms())
    for (auto& [db, cb] : b.terms()) {
      DiagramProduct p = cache().get(da, db);
      Scalar w = ca * cb;
      for (long i = 0; i < p.beta_loops; ++i) w = w * beta;
      out.add(p.d, w);
    }
  return out;
}

AffineDiagram diag_id(long N) {
  if (N < 0) bad("diag_id: negative size");
  AffineDiagram d;
  d.n_out = d.n_in = N;
  d.link.resize(2 * N);
  for (long m = 0; m < N; ++m) {
    d.link[m] = {(int)(N + m), 0};
    d.link[N + m] = {(int)m, 0};
  }
  return d;
}

AffineDiagram diag_e(long N, long j) {
  if (N < 2) bad("diag_e: need at least two nodes");
  long jj = fmod_(j, N);
  AffineDiagram d;
  d.n_out = d.n_in = N;
  d.link.resize(2 * N);
  auto arch = [&](int p, int q, long s) { d.link[p] = {q, s}; d.link[q] = {p, -s}; };
  if (jj >= 1) {
    arch((int)(jj - 1), (int)jj, 0);
    arch((int)(N + jj - 1), (int)(N + jj), 0);
    for (long m = 0; m < N; ++m)
      if (m != jj - 1 && m != jj) { d.link[m] = {(int)(N + m), 0}; d.link[N + m] = {(int)m, 0}; }
  } else {
    arch((int)(N - 1), 0, 1); // the pair straddling the dashed segment
    arch((int)(2 * N - 1), (int)N, 1);
    for (long m = 1; m < N - 1; ++m) { d.link[m] = {(int)(N + m), 0}; d.link[N + m] = {(int)m, 0}; }
  }
  return d;
}

AffineDiagram diag_c(long N, long j) {
  if (N < 2) bad("diag_c: need at least two nodes");
  long jj = fmod_(j, N);
  AffineDiagram d;
  d.n_out = N - 2;
  d.n_in = N;
  d.link.assign(2 * N - 2, {-1, 0});
  long O = N - 2; // inner points start at O
  auto join = [&](int p, int q, long s) { d.link[p] = {q, s}; d.link[q] = {p, -s}; };
  if (jj >= 1) {
    join((int)(O + jj - 1), (int)(O + jj), 0); // cup on inner nodes jj-1, jj
    for (long m = 0; m < jj - 1; ++m) join((int)m, (int)(O + m), 0);
    for (long m = jj + 1; m < N; ++m) join((int)(m - 2), (int)(O + m), 0);
  } else {
    join((int)(O + N - 1), (int)O, 1); // cup across the dashed segment
    for (long m = 1; m <= N - 2; ++m) join((int)(m - 1), (int)(O + m), 0);
  }
  return d;
}

AffineDiagram diag_cdag(long N, long j) { return diag_c(N, j).dagger(); }

AffineDiagram tensor_id(const AffineDiagram& d, long m) {
  if (m < 0) bad("tensor_id: negative strand count");
  if (d.ncloops != 0) bad("tensor_id: diagram has retained loops");
  for (const auto& [q, s] : d.link)
    if (s != 0) bad("tensor_id: diagram crosses the dashed segment");
  AffineDiagram r;
  r.n_out = d.n_out + m;
  r.n_in = d.n_in + m;
  r.link.assign(r.points(), {-1, 0});
  auto remap = [&](int p) { return p < d.n_out ? p : (int)(p + m); };
  for (int p = 0; p < (int)d.points(); ++p) {
    auto [q, s] = d.link[p];
    r.link[remap(p)] = {remap(q), s};
  }
  for (long a = 0; a < m; ++a) {
    int o = (int)(d.n_out + a);
    int i = (int)(r.n_out + d.n_in + a);
    r.link[o] = {i, 0};
    r.link[i] = {o, 0};
  }
  return r;
}

DiagramVector tensor_id(const DiagramVector& v, long m) {
  DiagramVector r;
  for (const auto& [d, c] : v.terms()) r.add(tensor_id(d, m), c);
  return r;
}

AffineDiagram diag_omega(long N) {
  if (N < 1) bad("diag_omega: need at least one node");
  AffineDiagram d;
  d.n_out = d.n_in = N;
  d.link.resize(2 * N);
  auto join = [&](int p, int q, long s) { d.link[p] = {q, s}; d.link[q] = {p, -s}; };
  for (long m = 0; m < N - 1; ++m) join((int)m, (int)(N + m + 1), 0);
  join((int)(N - 1), (int)N, 1);
  return d;
}

AffineDiagram diag_omega_inv(long N) { return diag_omega(N).dagger(); }

AffineDiagram diag_f() {
  AffineDiagram d;
  d.n_out = d.n_in = 0;
  d.ncloops = 1;
  return d;
}

AffineDiagram diag_E(long N) {
  if (N < 2 || N % 2 != 0) bad("diag_E: size must be even and positive");
  AffineDiagram d = diag_e(N, 0);
  for (long j = 2; j <= N - 2; j += 2) {
    DiagramProduct p = compose_diagrams(d, diag_e(N, j));
    if (p.beta_loops != 0 || p.d.ncloops != 0)
      throw std::logic_error("diag_E: unexpected loop");
    d = p.d;
  }
  return d;
}

DiagramVector transfer_single_row(long N) {
  if (N < 1) bad("transfer_single_row: need at least one node");
  DiagramVector out;
  for (unsigned long mask = 0; mask < (1ul << N); ++mask) {
    AffineDiagram d;
    d.n_out = d.n_in = N;
    d.link.assign(2 * N, {-1, 0});
    for (long m = 0; m < N; ++m) {
      bool am = !(mask >> m & 1);            // tile of face m
      bool am1 = !(mask >> ((m + 1) % N) & 1); // tile of face m+1
      long carry = (m + 1) / N;
      int X = (int)(am ? m : N + m);              // face m hands S (tile a) or N (tile b) to the cut
      int Y = (int)(am1 ? N + (m + 1) % N : (m + 1) % N);
      d.link[X] = {Y, carry};
      d.link[Y] = {X, -carry};
    }
    out.add(d, Scalar(1));
  }
  return out;
}

DiagramVector transfer_double_row(long N, const Scalar& beta) {
  if (N < 1) bad("transfer_double_row: need at least one node");
  // points of the 2 x N tile rectangle with its two boundary arcs
  const int S0 = 0, N0 = (int)N;                 // outer and inner nodes
  const int H0 = (int)(2 * N);                   // row interface
  const int VB0 = (int)(3 * N);                  // cuts inside the bottom row
  const int VT0 = (int)(3 * N + (N - 1));        // cuts inside the top row
  const int WB = (int)(3 * N + 2 * (N - 1)), EB = WB + 1, WT = WB + 2, ET = WB + 3;
  const int NP = WB + 4;

  DiagramVector out;
  std::vector<std::vector<int>> adj;
  for (unsigned long mask = 0; mask < (1ul << (2 * N)); ++mask) {
    adj.assign(NP, {});
    auto edge = [&](int p, int q) { adj[p].push_back(q); adj[q].push_back(p); };
    for (long m = 0; m < N; ++m) {
      int W = m == 0 ? WB : VB0 + (int)m - 1;
      int E = m == N - 1 ? EB : VB0 + (int)m;
      if (!(mask >> m & 1)) { edge(S0 + (int)m, W); edge(H0 + (int)m, E); }
      else { edge(S0 + (int)m, E); edge(H0 + (int)m, W); }
    }
    for (long m = 0; m < N; ++m) {
      int W = m == 0 ? WT : VT0 + (int)m - 1;
      int E = m == N - 1 ? ET : VT0 + (int)m;
      if (!(mask >> (N + m) & 1)) { edge(H0 + (int)m, W); edge(N0 + (int)m, E); }
      else { edge(H0 + (int)m, E); edge(N0 + (int)m, W); }
    }
    edge(WB, WT);
    edge(EB, ET);

    AffineDiagram d;
    d.n_out = d.n_in = N;
    d.link.assign(2 * N, {-1, 0});
    std::vector<char> used(NP, 0);
    // terminals have exactly one edge, interior points exactly two; walk by
    // entering each interior point on one edge and leaving on the other
    auto trace = [&](int start) {
      int prev = start, cur = adj[start][0];
      used[start] = 1;
      while (cur >= 2 * N) {
        used[cur] = 1;
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
      used[cur] = 1;
      return cur;
    };
    for (int p = 0; p < 2 * N; ++p) {
      if (d.link[p].first != -1) continue;
      int q = trace(p);
      d.link[p] = {q, 0};
      d.link[q] = {p, 0};
    }
    long loops = 0;
    for (int p = 2 * (int)N; p < NP; ++p) {
      if (used[p]) continue;
      ++loops;
      int prev = p, cur = adj[p][0];
      used[p] = 1;
      while (cur != p) {
        used[cur] = 1;
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
    }
    out.add(d, beta.pow(loops));
  }
  return out;
}

std::vector<AffineDiagram> planar_basis(long n_out, long n_in) {
  std::vector<AffineDiagram> basis;
  if ((n_out + n_in) % 2 != 0) return basis;
  long total = n_out + n_in;
  if (total == 0) {
    AffineDiagram d;
    basis.push_back(d);
    return basis;
  }
  // boundary order of the cut-open rectangle: outer 0..n_out-1, then inner
  // n_in-1 down to 0
  std::vector<int> seq(total);
  for (long i = 0; i < n_out; ++i) seq[i] = (int)i;
  for (long j = 0; j < n_in; ++j) seq[n_out + j] = (int)(n_out + n_in - 1 - j);

  std::vector<std::pair<int, int>> pairs;
  std::vector<char> taken(total, 0);
  std::function<void()> rec = [&]() {
    long i = 0;
    while (i < total && taken[i]) ++i;
    if (i == total) {
      AffineDiagram d;
      d.n_out = n_out;
      d.n_in = n_in;
      d.link.assign(total, {-1, 0});
      for (auto [x, y] : pairs) {
        d.link[seq[x]] = {seq[y], 0};
        d.link[seq[y]] = {seq[x], 0};
      }
      basis.push_back(d);
      return;
    }
    for (long j = i + 1; j < total; j += 2) {
      if (taken[j]) break; // matching across a taken point would cross it
      bool blocked = false;
      for (long m = i + 1; m < j; ++m)
        if (taken[m]) { blocked = true; break; }
      if (blocked) break;
      taken[i] = taken[j] = 1;
      pairs.push_back({(int)i, (int)j});
      rec();
      pairs.pop_back();
      taken[i] = taken[j] = 0;
    }
  };
  rec();
  return basis;
}

} // namespace ade
