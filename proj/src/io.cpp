#include "quasipoly/io.hpp"

#include "quasipoly/error.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace quasipoly {

namespace {

Json bigint_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw InvalidArgument("malformed integer string '" + s + "'");
    return BigInt(s);
  }
  throw InvalidArgument("expected an integer coefficient");
}

void require_format(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("expected a JSON object");
  if (j.contains("format") && j.at("format").get<std::string>() != kFormatTag)
    throw InvalidArgument("unsupported format tag '" + j.at("format").get<std::string>() + "'");
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed ") + what + ": " + e.what());
  }
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json coeffs_to_json(const CycInt& z) {
  Json arr = Json::array();
  for (const auto& c : z.coeffs()) arr.push_back(bigint_to_json(c));
  return arr;
}

CycInt coeffs_from_json(int n, const Json& j) {
  if (!j.is_array()) throw InvalidArgument("coefficients must be a JSON array");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.push_back(bigint_from_json(c));
  return CycInt(n, std::move(coeffs));
}

Json to_json(const CycInt& z) {
  Json j;
  j["n"] = z.modulus();
  j["coeffs"] = coeffs_to_json(z);
  return j;
}

CycInt cycint_from_json(const Json& j) {
  return guarded("CycInt", [&] { return coeffs_from_json(j.at("n").get<int>(), j.at("coeffs")); });
}

Window parse_window(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw InvalidArgument("window must look like ball:R or box:h1,h2,...");
  const std::string kind(text.substr(0, colon));
  std::vector<double> values;
  std::stringstream ss{std::string(text.substr(colon + 1))};
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("bad window number '" + item + "'");
    }
  }
  if (kind == "ball") {
    if (values.size() != 1) throw InvalidArgument("ball window takes one radius");
    Window w = Window::ball(values[0]);
    w.validate(0);
    return w;
  }
  if (kind == "box") {
    if (values.empty()) throw InvalidArgument("box window needs half-widths");
    Window w = Window::box(std::move(values));
    w.validate(w.half_widths.size());
    return w;
  }
  throw InvalidArgument("unknown window kind '" + kind + "'");
}

Json to_json(const Window& w) {
  Json j;
  if (w.kind == Window::Kind::Ball) {
    j["type"] = "ball";
    j["radius"] = w.radius;
  } else {
    j["type"] = "box";
    j["half_widths"] = w.half_widths;
  }
  return j;
}

Window window_from_json(const Json& j) {
  return guarded("window", [&] {
    const auto type = j.at("type").get<std::string>();
    if (type == "ball") return Window::ball(j.at("radius").get<double>());
    if (type == "box") return Window::box(j.at("half_widths").get<std::vector<double>>());
    throw InvalidArgument("unknown window type '" + type + "'");
  });
}

Json to_json(const ModelSetSpec& spec) {
  Json j;
  j["n"] = spec.n;
  j["reps"] = spec.reps;
  j["window"] = to_json(spec.window);
  j["shift"] = spec.shift;
  j["translate"] = to_json(spec.translate);
  j["label"] = spec.label;
  return j;
}

ModelSetSpec spec_from_json(const Json& j) {
  return guarded("model set spec", [&] {
    ModelSetSpec spec;
    spec.n = j.at("n").get<int>();
    spec.reps = j.at("reps").get<std::vector<int>>();
    spec.window = window_from_json(j.at("window"));
    spec.shift = j.at("shift").get<std::vector<double>>();
    spec.translate = j.contains("translate") ? cycint_from_json(j.at("translate")) : CycInt(spec.n);
    spec.label = j.value("label", std::string{});
    spec.validate();
    return spec;
  });
}

Json to_json(const PointSet& ps) {
  Json j;
  j["format"] = kFormatTag;
  j["spec"] = to_json(ps.spec);
  Json pts = Json::array();
  for (const auto& z : ps.points) pts.push_back(coeffs_to_json(z));
  j["points"] = std::move(pts);
  return j;
}

PointSet pointset_from_json(const Json& j) {
  require_format(j);
  return guarded("point set", [&] {
    PointSet ps{spec_from_json(j.at("spec")), {}};
    for (const auto& p : j.at("points")) ps.points.push_back(coeffs_from_json(ps.spec.n, p));
    return ps;
  });
}

Json to_json(const Homothety& h) {
  Json j;
  j["scale"] = to_json(h.scale);
  j["k"] = h.k;
  j["shift"] = to_json(h.shift);
  return j;
}

Homothety homothety_from_json(const Json& j) {
  return guarded("homothety", [&] {
    Homothety h{cycint_from_json(j.at("scale")), j.at("k").get<unsigned>(),
                cycint_from_json(j.at("shift"))};
    h.validate();
    return h;
  });
}

Json to_json(const PolygonDocument& doc) {
  Json j;
  j["format"] = kFormatTag;
  j["n"] = doc.polygon.modulus();
  Json verts = Json::array();
  for (const auto& v : doc.polygon.vertices()) verts.push_back(coeffs_to_json(v));
  j["vertices"] = std::move(verts);
  Json dirs = Json::array();
  for (const auto& d : doc.directions) dirs.push_back(coeffs_to_json(d.rep));
  j["directions"] = std::move(dirs);
  j["edges"] = doc.polygon.size();
  if (is_u_polygon(doc.polygon, doc.directions)) j["u_class"] = u_class(doc.polygon, doc.directions);
  if (doc.homothety) j["homothety"] = to_json(*doc.homothety);
  if (doc.spec) j["spec"] = to_json(*doc.spec);
  return j;
}

PolygonDocument polygon_from_json(const Json& j) {
  require_format(j);
  return guarded("polygon", [&] {
    const int n = j.at("n").get<int>();
    std::vector<CycInt> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(coeffs_from_json(n, v));
    std::vector<Direction> dirs;
    for (const auto& d : j.at("directions")) dirs.push_back(Direction::of(coeffs_from_json(n, d)));
    PolygonDocument doc{Polygon(std::move(verts)), DirectionSet(std::move(dirs)), std::nullopt,
                        std::nullopt};
    if (j.contains("homothety")) doc.homothety = homothety_from_json(j.at("homothety"));
    if (j.contains("spec")) doc.spec = spec_from_json(j.at("spec"));
    return doc;
  });
}

std::string xray_csv(const XRayTable& table) {
  std::ostringstream out;
  for (const auto& [key, count] : table.lines) {
    const auto c = key.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
    out << ';' << count << '\n';
  }
  return out.str();
}

std::string points_csv(const std::vector<PlanarPoint>& points) {
  std::ostringstream out;
  out << "x,y\n";
  for (const auto& p : points) out << fmt_double(p.real()) << ',' << fmt_double(p.imag()) << '\n';
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("cannot parse '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
  if (!out) throw InvalidArgument("error writing '" + path + "'");
}

}  // namespace quasipoly
