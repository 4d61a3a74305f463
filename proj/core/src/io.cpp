/*
 * Copyright 2026 The fracpair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fracpair/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "fracpair/errors.hpp"

namespace fracpair {

namespace {

using Json = nlohmann::ordered_json;

bool looks_numeric(const std::string& text, double& value) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc{} && ptr == text.data() + text.size() && std::isfinite(value);
}

std::string quote_csv(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(std::move(cell));
  return cells;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc{}) throw IoError("cannot format number");
  return {buf, ptr};
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw IoError("cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

void Table::add_row(std::initializer_list<double> values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  add_row(std::move(cells));
}

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns.size()) throw ValidationError("row width does not match the header");
  rows.push_back(std::move(cells));
}

std::size_t Table::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw IoError("missing column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> Table::numbers(std::string_view name) const {
  const std::size_t c = column(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(parse_double(row[c]));
  return out;
}

std::string to_csv_string(const Table& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += quote_csv(cells[i]);
    }
    out += '\n';
  };
  line(table.columns);
  for (const auto& row : table.rows) line(row);
  return out;
}

void write_csv(const std::filesystem::path& path, const Table& table) {
  auto out = open_out(path);
  out << to_csv_string(table);
  finish(out, path);
}

Table read_csv(const std::filesystem::path& path) {
  std::istringstream in(slurp(path));
  Table table;
  std::string line;
  if (!std::getline(in, line)) throw IoError("'" + path.string() + "' is empty");
  table.columns = split_csv_line(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != table.columns.size()) {
      throw IoError("'" + path.string() + "': row width does not match the header");
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::string to_json_string(const Manifest& manifest, const Table& table) {
  Json doc;
  doc["manifest"] = Json::object();
  for (const auto& [key, value] : manifest) doc["manifest"][key] = value;
  doc["rows"] = Json::array();
  for (const auto& row : table.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      double v = 0.0;
      if (looks_numeric(row[c], v)) {
        obj[table.columns[c]] = v;
      } else {
        obj[table.columns[c]] = row[c];
      }
    }
    doc["rows"].push_back(std::move(obj));
  }
  return doc.dump(1) + "\n";
}

void write_json(const std::filesystem::path& path, const Manifest& manifest, const Table& table) {
  auto out = open_out(path);
  out << to_json_string(manifest, table);
  finish(out, path);
}

JsonDocument read_json(const std::filesystem::path& path) {
  Json doc;
  try {
    doc = Json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw IoError("'" + path.string() + "': " + e.what());
  }
  if (!doc.is_object() || !doc.contains("manifest") || !doc.contains("rows")) {
    throw IoError("'" + path.string() + "' lacks the manifest/rows object");
  }
  JsonDocument out;
  for (const auto& [key, value] : doc["manifest"].items()) {
    out.manifest.emplace_back(key, value.is_string() ? value.get<std::string>() : value.dump());
  }
  for (const auto& row : doc["rows"]) {
    if (out.table.columns.empty()) {
      for (const auto& [key, value] : row.items()) out.table.columns.push_back(key);
    }
    std::vector<std::string> cells;
    for (const auto& name : out.table.columns) {
      if (!row.contains(name)) throw IoError("'" + path.string() + "': ragged rows");
      const auto& v = row[name];
      cells.push_back(v.is_number() ? format_double(v.get<double>())
                                    : (v.is_string() ? v.get<std::string>() : v.dump()));
    }
    out.table.rows.push_back(std::move(cells));
  }
  return out;
}

Table cloud_table(const WeightedPointCloud& cloud) {
  Table t{{"re", "im", "weight"}, {}};
  t.rows.reserve(cloud.points.size());
  for (const Complex& z : cloud.points) t.add_row({z.real(), z.imag(), cloud.weight});
  return t;
}

Table radial_table(const RadialHistogram& hist) {
  Table t{{"r_lo", "r_hi", "mass", "density"}, {}};
  for (std::size_t i = 0; i < hist.bins(); ++i) {
    t.add_row({hist.edges[i], hist.edges[i + 1], hist.mass[i], hist.density[i]});
  }
  return t;
}

Table planar_table(const PlanarHistogram& hist) {
  Table t{{"cell_x", "cell_y", "mass", "density"}, {}};
  const int r = hist.resolution;
  for (int iy = 0; iy < r; ++iy) {
    for (int ix = 0; ix < r; ++ix) {
      const auto idx = static_cast<std::size_t>(iy) * static_cast<std::size_t>(r) +
                       static_cast<std::size_t>(ix);
      t.add_row({hist.cell_center(ix), hist.cell_center(iy), hist.mass[idx], hist.density[idx]});
    }
  }
  return t;
}

Table comparison_table(const ComparisonReport& report) {
  Table t{{"N", "l1", "sup", "point_count", "window_mass", "seconds"}, {}};
  for (const auto& row : report.rows) {
    t.add_row({static_cast<double>(row.n), row.l1, row.sup, static_cast<double>(row.point_count),
               row.window_mass, row.seconds});
  }
  return t;
}

Table density_table(const DensityModel& model, double a, int bins) {
  const auto edges = uniform_edges(a, bins);
  struct Sample {
    double r, rho;
  };
  std::vector<Sample> samples;
  for (int i = 0; i < bins; ++i) {
    const double mid = 0.5 * (edges[static_cast<std::size_t>(i)] + edges[static_cast<std::size_t>(i) + 1]);
    samples.push_back({mid, model.rho(mid)});
  }
  for (double d : model.discontinuity_radii(a)) {
    samples.push_back({d, model.rho_left(d)});
    samples.push_back({d, model.rho(d)});
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& x, const Sample& y) { return x.r < y.r; });
  Table t{{"r", "rho", "rho_radial"}, {}};
  for (const auto& s : samples) t.add_row({s.r, s.rho, 2.0 * std::numbers::pi * s.r * s.rho});
  return t;
}

WeightedPointCloud cloud_from_table(const Table& table) {
  WeightedPointCloud cloud;
  const auto re = table.numbers("re");
  const auto im = table.numbers("im");
  const auto w = table.numbers("weight");
  for (std::size_t i = 0; i < re.size(); ++i) cloud.points.emplace_back(re[i], im[i]);
  if (!w.empty()) cloud.weight = w.front();
  return cloud;
}

RadialHistogram radial_from_table(const Table& table) {
  RadialHistogram h;
  const auto lo = table.numbers("r_lo");
  const auto hi = table.numbers("r_hi");
  h.mass = table.numbers("mass");
  h.density = table.numbers("density");
  if (!lo.empty()) {
    h.edges = lo;
    h.edges.push_back(hi.back());
  }
  return h;
}

}  // namespace fracpair
