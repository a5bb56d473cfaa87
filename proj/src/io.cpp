#include "lcone/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lcone::io {

namespace {

[[noreturn]] void fail(const std::string& path, int line, const std::string& msg) {
  throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

double parse_num(const std::string& s, const std::string& path, int line) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    fail(path, line, "cannot parse number '" + s + "'");
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.precision(17);
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open: " + path);
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// profiles
// ---------------------------------------------------------------------------

ConeProfile<2> read_profile2(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  int ln = 0;
  std::getline(f, line);
  ++ln;
  if (line != "theta,value") fail(path, ln, "expected header 'theta,value'");
  std::vector<double> thetas, values;
  while (std::getline(f, line)) {
    ++ln;
    if (line.empty()) continue;
    auto cols = split_csv(line);
    if (cols.size() != 2) fail(path, ln, "expected two columns");
    double th = parse_num(cols[0], path, ln);
    double v = parse_num(cols[1], path, ln);
    if (th < 0.0 || th >= 2.0 * kPi) fail(path, ln, "theta out of [0, 2pi)");
    if (!thetas.empty() && th <= thetas.back()) fail(path, ln, "theta not strictly increasing");
    if (!(v > 0.0)) fail(path, ln, "value must be positive");
    thetas.push_back(th);
    values.push_back(v);
  }
  int m = static_cast<int>(thetas.size());
  if (m < 3) fail(path, ln, "need at least 3 samples");
  for (int i = 0; i < m; ++i)
    if (std::abs(thetas[i] - 2.0 * kPi * i / m) > 1e-9)
      fail(path, i + 2, "theta grid is not uniform");
  return ConeProfile<2>(circle_grid(m), std::move(values));
}

void write_profile2(const std::string& path, const ConeProfile<2>& p) {
  auto f = open_out(path);
  f << "theta,value\n";
  for (int i = 0; i < p.grid->size(); ++i) f << p.grid->angle(i) << "," << p.values[i] << "\n";
}

ConeProfile<3> read_profile3(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  int ln = 0;
  std::vector<Vec<3>> nodes;
  std::vector<double> values;
  std::vector<int> value_lines;
  while (std::getline(f, line)) {
    ++ln;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "v") {
      Vec<3> x;
      if (!(ss >> x[0] >> x[1] >> x[2])) fail(path, ln, "expected 'v x y z'");
      if (std::abs(norm(x) - 1.0) > 1e-9) fail(path, ln, "node is not a unit vector");
      if (!values.empty()) fail(path, ln, "node lines must precede value lines");
      nodes.push_back(x);
    } else if (tag == "f") {
      double v;
      if (!(ss >> v)) fail(path, ln, "expected 'f value'");
      if (!(v > 0.0)) fail(path, ln, "value must be positive");
      values.push_back(v);
      value_lines.push_back(ln);
    } else {
      fail(path, ln, "unknown record '" + tag + "'");
    }
  }
  if (nodes.size() != values.size())
    fail(path, ln, "node and value counts differ");
  int level = -1;
  for (int l = 0; l <= 7; ++l)
    if (icosphere_node_count(l) == static_cast<int>(nodes.size())) level = l;
  if (level < 0) fail(path, ln, "node count does not match any icosphere level");
  auto grid = icosphere_grid(level);
  for (int i = 0; i < grid->size(); ++i)
    if (norm(grid->node(i) - nodes[i]) > 1e-9)
      fail(path, 1 + i, "node does not match the generated icosphere ordering");
  return ConeProfile<3>(std::move(grid), std::move(values));
}

void write_profile3(const std::string& path, const ConeProfile<3>& p) {
  auto f = open_out(path);
  for (int i = 0; i < p.grid->size(); ++i) {
    const auto& x = p.grid->node(i);
    f << "v " << x[0] << " " << x[1] << " " << x[2] << "\n";
  }
  for (double v : p.values) f << "f " << v << "\n";
}

// ---------------------------------------------------------------------------
// graphs
// ---------------------------------------------------------------------------

template <int N>
FlatGraph<N> read_flat_graph(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  int ln = 0;
  std::getline(f, line);
  ++ln;
  std::stringstream hs(line);
  std::string tag;
  hs >> tag;
  if (tag != "#") fail(path, ln, "expected '# lattice ...' header");
  hs >> tag;
  if (tag != "lattice") fail(path, ln, "expected '# lattice ...' header");
  Vec<N> lo, hi;
  std::array<int, N> nodes{};
  for (int k = 0; k < N; ++k) hs >> lo[k];
  for (int k = 0; k < N; ++k) hs >> hi[k];
  for (int k = 0; k < N; ++k) hs >> nodes[k];
  if (!hs) fail(path, ln, "bad lattice header");
  std::getline(f, line);
  ++ln;
  FlatGraph<N> g(lo, hi, nodes);
  std::size_t count = 0;
  while (std::getline(f, line)) {
    ++ln;
    if (line.empty()) continue;
    auto cols = split_csv(line);
    if (cols.size() != N + 1) fail(path, ln, "wrong column count");
    if (count >= g.values.size()) fail(path, ln, "too many rows for the lattice");
    std::array<int, N> ix{};
    std::size_t rest = count;
    for (int k = N - 1; k >= 0; --k) {
      ix[k] = static_cast<int>(rest % nodes[k]);
      rest /= nodes[k];
    }
    Vec<N> want = g.point(ix);
    for (int k = 0; k < N; ++k) {
      double x = parse_num(cols[k], path, ln);
      if (std::abs(x - want[k]) > 1e-9) fail(path, ln, "row off the declared lattice");
    }
    g.values[count] = parse_num(cols[N], path, ln);
    if (!std::isfinite(g.values[count])) fail(path, ln, "non-finite height");
    ++count;
  }
  if (count != g.values.size()) fail(path, ln, "missing rows for the lattice");
  g.validate_lipschitz();
  return g;
}

template <int N>
void write_flat_graph(const std::string& path, const FlatGraph<N>& g) {
  auto f = open_out(path);
  f << "# lattice";
  for (int k = 0; k < N; ++k) f << " " << g.lo[k];
  for (int k = 0; k < N; ++k) f << " " << g.hi[k];
  for (int k = 0; k < N; ++k) f << " " << g.nodes[k];
  f << "\n";
  f << (N == 2 ? "x1,x2,nu" : "x1,x2,x3,nu") << "\n";
  std::array<int, N> ix{};
  for (std::size_t c = 0; c < g.values.size(); ++c) {
    std::size_t rest = c;
    for (int k = N - 1; k >= 0; --k) {
      ix[k] = static_cast<int>(rest % g.nodes[k]);
      rest /= g.nodes[k];
    }
    Vec<N> p = g.point(ix);
    for (int k = 0; k < N; ++k) f << p[k] << ",";
    f << g.values[c] << "\n";
  }
}

HypGraph read_hyp_graph(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  int ln = 0;
  std::getline(f, line);
  ++ln;
  std::stringstream hs(line);
  std::string tag, kind;
  int dim, ns, ntheta;
  double smax;
  hs >> tag >> kind >> dim >> ns >> ntheta >> smax;
  if (!hs || tag != "#" || kind != "grid") fail(path, ln, "expected '# grid dim ns ntheta smax'");
  HypGraph g(dim, ns, ntheta, smax);
  std::getline(f, line);
  ++ln;
  if (line != "s,theta,f") fail(path, ln, "expected header 's,theta,f'");
  std::size_t count = 0;
  while (std::getline(f, line)) {
    ++ln;
    if (line.empty()) continue;
    auto cols = split_csv(line);
    if (cols.size() != 3) fail(path, ln, "expected three columns");
    if (count >= g.f.size()) fail(path, ln, "too many rows for the grid");
    int is = static_cast<int>(count / g.ntheta);
    int it = static_cast<int>(count % g.ntheta);
    if (std::abs(parse_num(cols[0], path, ln) - g.s_at(is)) > 1e-9 ||
        std::abs(parse_num(cols[1], path, ln) - g.theta_at(it)) > 1e-9)
      fail(path, ln, "row off the declared grid");
    double v = parse_num(cols[2], path, ln);
    if (!(v > 0.0)) fail(path, ln, "f must be positive");
    g.f[count] = v;
    ++count;
  }
  if (count != g.f.size()) fail(path, ln, "missing rows for the grid");
  return g;
}

void write_hyp_graph(const std::string& path, const HypGraph& g) {
  auto f = open_out(path);
  f << "# grid " << g.dim << " " << g.ns << " " << g.ntheta << " " << g.s_max << "\n";
  f << "s,theta,f\n";
  for (int is = 0; is <= g.ns; ++is)
    for (int it = 0; it < g.ntheta; ++it)
      f << g.s_at(is) << "," << g.theta_at(it) << "," << g.f[g.index(is, it)] << "\n";
}

// ---------------------------------------------------------------------------
// hyperbolic sets
// ---------------------------------------------------------------------------

template <int N>
HyperbolicSet<N> read_ball_union(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  int ln = 0;
  std::getline(f, line);
  ++ln;
  const char* want = N == 2 ? "s,theta,delta" : "s,theta,phi,delta";
  if (line != want) fail(path, ln, std::string("expected header '") + want + "'");
  std::vector<GeodesicBall<N>> balls;
  while (std::getline(f, line)) {
    ++ln;
    if (line.empty()) continue;
    auto cols = split_csv(line);
    if (cols.size() != N + 1) fail(path, ln, "wrong column count");
    double s = parse_num(cols[0], path, ln);
    if (s < 0.0) fail(path, ln, "s must be nonnegative");
    Vec<N> dir;
    if constexpr (N == 2) {
      double th = parse_num(cols[1], path, ln);
      dir = Vec<2>{std::cos(th), std::sin(th)};
    } else {
      double th = parse_num(cols[1], path, ln), ph = parse_num(cols[2], path, ln);
      dir = Vec<3>{std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
    }
    double delta = parse_num(cols[N], path, ln);
    if (!(delta > 0.0)) fail(path, ln, "delta must be positive");
    balls.push_back({s == 0.0 ? hyp_point<N>(0.0, dir) : hyp_point<N>(s, dir), delta});
  }
  return make_ball_union(std::move(balls));
}

template <int N>
void write_ball_union(const std::string& path, const HyperbolicSet<N>& E) {
  if (!E.is_ball_union()) throw std::invalid_argument("write_ball_union: not a ball union");
  auto f = open_out(path);
  f << (N == 2 ? "s,theta,delta" : "s,theta,phi,delta") << "\n";
  for (const auto& b : E.balls()) {
    double s = std::acosh(std::max(1.0, b.center.t));
    if constexpr (N == 2) {
      double th = std::atan2(b.center.x[1], b.center.x[0]);
      if (th < 0.0) th += 2.0 * kPi;
      f << s << "," << th << "," << b.radius << "\n";
    } else {
      double r = norm(b.center.x);
      double th = r > 0.0 ? std::acos(std::clamp(b.center.x[2] / r, -1.0, 1.0)) : 0.0;
      double ph = std::atan2(b.center.x[1], b.center.x[0]);
      if (ph < 0.0) ph += 2.0 * kPi;
      f << s << "," << th << "," << ph << "," << b.radius << "\n";
    }
  }
}

HyperbolicSet<2> read_grid_set(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  int ln = 0;
  std::getline(f, line);
  ++ln;
  std::stringstream hs(line);
  std::string tag, kind;
  int ns, ntheta;
  double smax;
  hs >> tag >> kind >> ns >> ntheta >> smax;
  if (!hs || tag != "#" || kind != "polar-grid")
    fail(path, ln, "expected '# polar-grid ns ntheta smax'");
  PolarGridIndicator g(ns, ntheta, smax);
  for (int is = 0; is < ns; ++is) {
    if (!std::getline(f, line)) fail(path, ln, "missing occupancy row");
    ++ln;
    std::stringstream rs(line);
    int run, it = 0;
    bool value = false;  // runs alternate starting with zeros
    while (rs >> run) {
      if (run < 0 || it + run > ntheta) fail(path, ln, "run length overflows the row");
      for (int k = 0; k < run; ++k) g.occ[g.index(is, it + k)] = value ? 1 : 0;
      it += run;
      value = !value;
    }
    if (it != ntheta) fail(path, ln, "row runs do not cover the grid");
  }
  return make_grid_set(std::move(g));
}

void write_grid_set(const std::string& path, const HyperbolicSet<2>& E) {
  if (E.is_ball_union()) throw std::invalid_argument("write_grid_set: not a grid indicator");
  const auto& g = E.grid();
  auto f = open_out(path);
  f << "# polar-grid " << g.ns << " " << g.ntheta << " " << g.s_max << "\n";
  for (int is = 0; is < g.ns; ++is) {
    bool value = false;
    int run = 0;
    bool first = true;
    for (int it = 0; it < g.ntheta; ++it) {
      bool v = g.occ[g.index(is, it)] != 0;
      if (v == value) {
        ++run;
      } else {
        f << (first ? "" : " ") << run;
        first = false;
        value = v;
        run = 1;
      }
    }
    f << (first ? "" : " ") << run << "\n";
  }
}

// ---------------------------------------------------------------------------
// descent traces
// ---------------------------------------------------------------------------

template <int N>
void write_descent_trace(const std::string& csv_path, const DescentTrace<N>& trace) {
  auto f = open_out(csv_path);
  f << (N == 2 ? "iter,w_t,w_x1,w_x2,perimeter,volume,gap_to_cap"
               : "iter,w_t,w_x1,w_x2,w_x3,perimeter,volume,gap_to_cap")
    << "\n";
  for (const auto& r : trace.rows) {
    f << r.iter << "," << r.plane_normal.t;
    for (int k = 0; k < N; ++k) f << "," << r.plane_normal.x[k];
    f << "," << r.perimeter << "," << r.volume << "," << r.gap_to_cap << "\n";
  }

  nlohmann::ordered_json j;
  j["seed"] = trace.options.seed;
  j["iterations"] = trace.options.iterations;
  j["alpha_max"] = trace.options.alpha_max;
  j["volume_dirs"] = trace.options.volume_dirs;
  j["volume_radial"] = trace.options.volume_radial;
  j["early_stop_rel_gain"] = trace.options.early_stop_rel_gain;
  j["early_stop_window"] = trace.options.early_stop_window;
  j["cap_radius"] = trace.cap_radius;
  j["cap_volume"] = trace.cap_volume;
  std::string side = csv_path;
  auto dotpos = side.find_last_of('.');
  if (dotpos != std::string::npos) side.resize(dotpos);
  auto jf = open_out(side + ".json");
  jf << j.dump(2) << "\n";
}

template FlatGraph<2> read_flat_graph(const std::string&);
template FlatGraph<3> read_flat_graph(const std::string&);
template void write_flat_graph(const std::string&, const FlatGraph<2>&);
template void write_flat_graph(const std::string&, const FlatGraph<3>&);
template HyperbolicSet<2> read_ball_union(const std::string&);
template HyperbolicSet<3> read_ball_union(const std::string&);
template void write_ball_union(const std::string&, const HyperbolicSet<2>&);
template void write_ball_union(const std::string&, const HyperbolicSet<3>&);
template void write_descent_trace(const std::string&, const DescentTrace<2>&);
template void write_descent_trace(const std::string&, const DescentTrace<3>&);

}  // namespace lcone::io
