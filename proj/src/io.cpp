#include "pettykit/io.hpp"

#include <fstream>
#include <sstream>

namespace pettykit {

json body_to_json(const Polytope& P) {
  json j;
  j["dim"] = P.dim();
  json verts = json::array();
  for (const auto& v : P.vertices()) {
    json row = json::array();
    for (int i = 0; i < v.size(); ++i) row.push_back(v[i]);
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  return j;
}

Polytope body_from_json(const json& j) {
  if (!j.contains("dim") || !j.contains("vertices"))
    throw ConfigError("body json needs 'dim' and 'vertices'");
  const int dim = j.at("dim").get<int>();
  std::vector<Vec> pts;
  for (const auto& row : j.at("vertices")) {
    Vec v(dim);
    if (static_cast<int>(row.size()) != dim)
      throw ConfigError("body json: vertex of wrong dimension");
    for (int i = 0; i < dim; ++i) v[i] = row.at(i).get<double>();
    pts.push_back(std::move(v));
  }
  return convex_hull(pts, dim);  // DegenerateInput on flat input
}

json estimate_to_json(const Estimate& e) {
  return json{{"value", e.value},
              {"stderr", e.std_error},
              {"n", e.n_samples},
              {"seed", e.seed}};
}

json measure_to_json(const RadialMeasure& M) {
  json j{{"kind", M.kind_name()}, {"dim", M.dim}};
  if (M.kind == MeasureKind::generalized_cauchy) j["beta"] = M.beta;
  return j;
}

RadialMeasure measure_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int dim = j.at("dim").get<int>();
  if (kind == "lebesgue") return RadialMeasure::lebesgue(dim);
  if (kind == "gaussian") return RadialMeasure::gaussian(dim);
  if (kind == "generalized_cauchy" || kind == "cauchy")
    return RadialMeasure::generalized_cauchy(dim, j.at("beta").get<double>());
  throw ConfigError("unknown measure kind: " + kind);
}

json density_to_json(const GridDensity& g) {
  json j;
  j["dim"] = g.dim;
  json lo = json::array(), hi = json::array(), res = json::array();
  for (int a = 0; a < g.dim; ++a) {
    lo.push_back(g.lo[a]);
    hi.push_back(g.hi[a]);
    res.push_back(g.res[a]);
  }
  j["box"] = json{{"lo", lo}, {"hi", hi}};
  j["resolution"] = res;
  j["values"] = g.values;  // row-major, last axis fastest
  return j;
}

GridDensity density_from_json(const json& j) {
  GridDensity g;
  g.dim = j.at("dim").get<int>();
  for (int a = 0; a < g.dim; ++a) {
    g.lo[a] = j.at("box").at("lo").at(a).get<double>();
    g.hi[a] = j.at("box").at("hi").at(a).get<double>();
    g.res[a] = j.at("resolution").at(a).get<int>();
  }
  g.values = j.at("values").get<std::vector<double>>();
  g.validate();
  return g;
}

Polytope make_standard(const std::string& name, const json& params) {
  auto get = [&](const char* key, double dflt) {
    return params.contains(key) ? params.at(key).get<double>() : dflt;
  };
  auto geti = [&](const char* key, int dflt) {
    return params.contains(key) ? params.at(key).get<int>() : dflt;
  };
  if (name == "square") return make_square(get("halfwidth", 1.0));
  if (name == "unit-square") return make_box(vec2(0, 0), vec2(1, 1));
  if (name == "cube") return make_cube(get("halfwidth", 1.0));
  if (name == "box") {
    const auto lo = params.at("lo"), hi = params.at("hi");
    Vec l(lo.size()), h(hi.size());
    for (std::size_t i = 0; i < lo.size(); ++i) l[i] = lo.at(i).get<double>();
    for (std::size_t i = 0; i < hi.size(); ++i) h[i] = hi.at(i).get<double>();
    return make_box(l, h);
  }
  if (name == "simplex") return make_simplex(geti("dim", 2));
  if (name == "triangle") return make_simplex(2);
  if (name == "kgon") return make_kgon(geti("k", 64), get("circumradius", 1.0));
  if (name == "ball") {
    const int dim = geti("dim", 2);
    const int pts = geti("points", dim == 2 ? 256 : 512);
    if (params.contains("volume"))
      return make_ball_approx(dim, params.at("volume").get<double>(), pts);
    const double r = get("radius", 1.0);
    const double vol = dim == 2 ? 3.14159265358979323846 * r * r
                                : 4.18879020478639098462 * r * r * r;
    return make_ball_approx(dim, vol, pts);
  }
  if (name == "random-polygon")
    return make_random_polygon(params.at("seed").get<std::uint64_t>(),
                               geti("k", 10), get("rmin", 0.7), get("rmax", 1.3));
  if (name == "random-polytope")
    return make_random_polytope3(params.at("seed").get<std::uint64_t>(),
                                 geti("k", 12), get("rmin", 0.7),
                                 get("rmax", 1.3));
  throw UnknownName("unknown body: " + name);
}

QBody make_standard_q(const std::string& name, const json& params) {
  if (name == "segment01" || name == "q01") return make_q_segment01();
  if (name == "segment-sym" || name == "qsym") return make_q_segment_sym();
  if (name == "square" || name == "qsquare") return make_q_square();
  if (name == "neg-simplex")
    return make_q_neg_simplex(params.contains("m") ? params.at("m").get<int>()
                                                   : 2);
  if (name == "interval")
    return QBody::interval(params.at("lo").get<double>(),
                           params.at("hi").get<double>());
  throw UnknownName("unknown Q body: " + name);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string points_to_csv(const std::vector<Vec>& points) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& p : points) {
    for (int i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << "\n";
  }
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  // atomic-ish: write then rename
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << content;
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace pettykit
