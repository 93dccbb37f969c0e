#include "rainbow/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rainbow/rational.hpp"

namespace rainbow {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

int file_m(const ColoredPointSet& s) {
  return s.has_equal_color_classes() ? s.points_per_color() : 0;
}

}  // namespace

std::string write_point_set(const ColoredPointSet& s, FileFormat fmt) {
  if (fmt == FileFormat::Csv) {
    std::ostringstream out;
    out << "x_num,x_den,y_num,y_den,color\n";
    for (int i = 0; i < s.size(); ++i) {
      const Point& p = s.points[i];
      out << num(p.x).str() << ',' << den(p.x).str() << ',' << num(p.y).str() << ','
          << den(p.y).str() << ',' << s.colors[i] << '\n';
    }
    return out.str();
  }
  ordered_json j;
  j["k"] = s.k;
  j["m"] = file_m(s);
  j["points"] = ordered_json::array();
  for (int i = 0; i < s.size(); ++i) {
    ordered_json p;
    p["x"] = to_fraction_string(s.points[i].x);
    p["y"] = to_fraction_string(s.points[i].y);
    p["color"] = s.colors[i];
    j["points"].push_back(p);
  }
  return j.dump(2) + "\n";
}

ColoredPointSet read_point_set(const std::string& text, FileFormat fmt) {
  ColoredPointSet s;
  if (fmt == FileFormat::Csv) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
    int max_color = 0;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream row(line);
      std::string xn, xd, yn, yd, c;
      if (!std::getline(row, xn, ',') || !std::getline(row, xd, ',') ||
          !std::getline(row, yn, ',') || !std::getline(row, yd, ',') || !std::getline(row, c))
        throw std::invalid_argument("malformed CSV row: " + line);
      Scalar x = parse_fraction_or_throw(xn) / parse_fraction_or_throw(xd);
      Scalar y = parse_fraction_or_throw(yn) / parse_fraction_or_throw(yd);
      s.points.push_back(Point{x, y});
      s.colors.push_back(std::stoi(c));
      max_color = std::max(max_color, s.colors.back());
    }
    s.k = max_color;
    return s;
  }

  json j = json::parse(text);
  s.k = j.at("k").get<int>();
  for (const auto& p : j.at("points")) {
    s.points.push_back(Point{parse_fraction_or_throw(p.at("x").get<std::string>()),
                             parse_fraction_or_throw(p.at("y").get<std::string>())});
    s.colors.push_back(p.at("color").get<int>());
  }
  const int m = j.at("m").get<int>();
  if (m > 0) {
    if (!s.has_equal_color_classes() || s.points_per_color() != m)
      throw std::invalid_argument("file header m does not match color classes");
  }
  return s;
}

FileFormat format_from_path(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return FileFormat::Csv;
  return FileFormat::Json;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

ColoredPointSet load_point_set(const std::string& path) {
  return read_point_set(read_file(path), format_from_path(path));
}

void save_point_set(const ColoredPointSet& s, const std::string& path) {
  write_file(path, write_point_set(s, format_from_path(path)));
}

std::string write_witnesses(const std::vector<PolygonWitness>& ws) {
  ordered_json j = ordered_json::array();
  for (const PolygonWitness& w : ws) {
    ordered_json e;
    e["shape"] = w.shape == Shape::Triangle ? "triangle" : "quad";
    e["vertices"] = ordered_json::array();
    for (int i = 0; i < w.size(); ++i) e["vertices"].push_back(w.vertices[i]);
    e["convex"] = w.convex;
    e["empty"] = w.empty;
    e["rainbow"] = w.rainbow;
    j.push_back(e);
  }
  return j.dump(2) + "\n";
}

std::vector<PolygonWitness> read_witnesses(const std::string& text) {
  json j = json::parse(text);
  std::vector<PolygonWitness> ws;
  for (const auto& e : j) {
    PolygonWitness w;
    w.shape = e.at("shape").get<std::string>() == "triangle" ? Shape::Triangle
                                                             : Shape::Quadrilateral;
    const auto& v = e.at("vertices");
    for (std::size_t i = 0; i < v.size() && i < 4; ++i) w.vertices[i] = v[i].get<int>();
    w.convex = e.at("convex").get<bool>();
    w.empty = e.at("empty").get<bool>();
    w.rainbow = e.at("rainbow").get<bool>();
    ws.push_back(w);
  }
  return ws;
}

std::vector<PolygonWitness> load_witnesses(const std::string& path) {
  return read_witnesses(read_file(path));
}

void save_witnesses(const std::vector<PolygonWitness>& ws, const std::string& path) {
  write_file(path, write_witnesses(ws));
}

}  // namespace rainbow
