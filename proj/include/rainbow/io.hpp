#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rainbow/colored_set.hpp"

namespace rainbow {

enum class FileFormat { Json, Csv };

/// JSON schema: {"k": int, "m": int, "points": [{"x": "p/q", "y": "p/q",
/// "color": int}, ...]}. Rationals are always "p/q" strings; round-trips are
/// bit-exact. m = 0 marks a set without equal color classes.
std::string write_point_set(const ColoredPointSet& s, FileFormat fmt = FileFormat::Json);

/// CSV mode: one "x_num,x_den,y_num,y_den,color" row per point.
ColoredPointSet read_point_set(const std::string& text, FileFormat fmt = FileFormat::Json);

FileFormat format_from_path(const std::string& path);

ColoredPointSet load_point_set(const std::string& path);
void save_point_set(const ColoredPointSet& s, const std::string& path);

std::string write_witnesses(const std::vector<PolygonWitness>& ws);
std::vector<PolygonWitness> read_witnesses(const std::string& text);
std::vector<PolygonWitness> load_witnesses(const std::string& path);
void save_witnesses(const std::vector<PolygonWitness>& ws, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace rainbow
