#include "agsac/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace agsac {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string("dataset: non-finite ") + what);
  }
}

void require_label_count(std::size_t n,
                         const std::optional<std::vector<std::uint8_t>>& l) {
  if (l && l->size() != n) {
    throw std::invalid_argument(
        "dataset: label count does not match observation count");
  }
}

std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& s) {
  std::size_t pos = 0;
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("dataset: bad number '" + s + "'");
  return v;
}

}  // namespace

const char* task_name(Task t) {
  return t == Task::line ? "line" : "homography";
}

std::optional<Task> parse_task(const std::string& name) {
  if (name == "line") return Task::line;
  if (name == "homography") return Task::homography;
  return std::nullopt;
}

Dataset Dataset::from_points(std::vector<Point2> points,
                             std::optional<std::vector<std::uint8_t>> labels) {
  for (const auto& p : points) {
    require_finite(p.x, "x");
    require_finite(p.y, "y");
  }
  require_label_count(points.size(), labels);
  Dataset d;
  d.obs_ = std::move(points);
  d.labels_ = std::move(labels);
  return d;
}

Dataset Dataset::from_correspondences(
    std::vector<Correspondence> correspondences,
    std::optional<std::vector<std::uint8_t>> labels) {
  for (const auto& c : correspondences) {
    require_finite(c.source.x, "x1");
    require_finite(c.source.y, "y1");
    require_finite(c.target.x, "x2");
    require_finite(c.target.y, "y2");
  }
  require_label_count(correspondences.size(), labels);
  Dataset d;
  d.obs_ = std::move(correspondences);
  d.labels_ = std::move(labels);
  return d;
}

Task Dataset::task() const {
  return holds_points() ? Task::line : Task::homography;
}

bool Dataset::holds_points() const {
  return std::holds_alternative<std::vector<Point2>>(obs_);
}

int Dataset::size() const {
  return holds_points() ? static_cast<int>(points().size())
                        : static_cast<int>(correspondences().size());
}

const std::vector<Point2>& Dataset::points() const {
  return std::get<std::vector<Point2>>(obs_);
}

const std::vector<Correspondence>& Dataset::correspondences() const {
  return std::get<std::vector<Correspondence>>(obs_);
}

const std::optional<std::vector<std::uint8_t>>& Dataset::labels() const {
  return labels_;
}

std::string Dataset::to_csv() const {
  std::string out;
  const auto label_at = [this](std::size_t i) {
    return labels_ ? (*labels_)[i] : std::uint8_t{1};
  };
  if (holds_points()) {
    out = "x,y,label\n";
    const auto& pts = points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out += format_value(pts[i].x) + "," + format_value(pts[i].y) + "," +
             std::to_string(int(label_at(i))) + "\n";
    }
  } else {
    out = "x1,y1,x2,y2,label\n";
    const auto& cs = correspondences();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      out += format_value(cs[i].source.x) + "," + format_value(cs[i].source.y) +
             "," + format_value(cs[i].target.x) + "," +
             format_value(cs[i].target.y) + "," +
             std::to_string(int(label_at(i))) + "\n";
    }
  }
  return out;
}

Dataset Dataset::from_csv(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  if (!std::getline(ss, line)) {
    throw std::invalid_argument("dataset: empty CSV");
  }
  auto header = split_csv_line(trim(line));
  for (auto& h : header) h = trim(h);

  bool points_file = false;
  bool has_label = false;
  if (header == std::vector<std::string>{"x", "y", "label"}) {
    points_file = true;
    has_label = true;
  } else if (header == std::vector<std::string>{"x", "y"}) {
    points_file = true;
  } else if (header ==
             std::vector<std::string>{"x1", "y1", "x2", "y2", "label"}) {
    has_label = true;
  } else if (header != std::vector<std::string>{"x1", "y1", "x2", "y2"}) {
    throw std::invalid_argument("dataset: unrecognized CSV header");
  }

  std::vector<Point2> pts;
  std::vector<Correspondence> cs;
  std::vector<std::uint8_t> labels;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    const std::size_t expected = (points_file ? 2u : 4u) + (has_label ? 1u : 0u);
    if (f.size() != expected) {
      throw std::invalid_argument("dataset: row with wrong field count");
    }
    if (points_file) {
      pts.push_back({parse_double(f[0]), parse_double(f[1])});
    } else {
      cs.push_back({{parse_double(f[0]), parse_double(f[1])},
                    {parse_double(f[2]), parse_double(f[3])}});
    }
    if (has_label) {
      labels.push_back(parse_double(f.back()) != 0.0 ? 1 : 0);
    }
  }

  std::optional<std::vector<std::uint8_t>> maybe_labels;
  if (has_label) maybe_labels = std::move(labels);
  return points_file
             ? from_points(std::move(pts), std::move(maybe_labels))
             : from_correspondences(std::move(cs), std::move(maybe_labels));
}

void Dataset::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("dataset: cannot open " + path.string());
  out << to_csv();
}

Dataset Dataset::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("dataset: cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_csv(ss.str());
}

}  // namespace agsac
