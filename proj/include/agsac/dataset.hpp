#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "agsac/geometry.hpp"

namespace agsac {

enum class Task { line, homography };

const char* task_name(Task t);
std::optional<Task> parse_task(const std::string& name);

// Indexed collection of observations, all Point2 or all Correspondence,
// with optional ground-truth inlier labels. Immutable after construction;
// indices address observations stably for the lifetime of a run.
class Dataset {
 public:
  static Dataset from_points(std::vector<Point2> points,
                             std::optional<std::vector<std::uint8_t>> labels =
                                 std::nullopt);
  static Dataset from_correspondences(
      std::vector<Correspondence> correspondences,
      std::optional<std::vector<std::uint8_t>> labels = std::nullopt);

  Task task() const;
  int size() const;
  bool holds_points() const;

  const std::vector<Point2>& points() const;
  const std::vector<Correspondence>& correspondences() const;
  const std::optional<std::vector<std::uint8_t>>& labels() const;

  // Header "x,y,label" for points, "x1,y1,x2,y2,label" for correspondences.
  // The label column is optional on import and written as 1 when a dataset
  // carries no labels.
  std::string to_csv() const;
  static Dataset from_csv(const std::string& text);

  void save_csv(const std::filesystem::path& path) const;
  static Dataset load_csv(const std::filesystem::path& path);

 private:
  Dataset() = default;

  std::variant<std::vector<Point2>, std::vector<Correspondence>> obs_;
  std::optional<std::vector<std::uint8_t>> labels_;
};

}  // namespace agsac
