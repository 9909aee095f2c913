// Copyright 2026 The goowe Authors
// SPDX-License-Identifier: Apache-2.0

#include "goowe/streams/readers.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <json.hpp>

namespace goowe {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string unquote(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '\'' || s.front() == '"') && s.back() == s.front())
    return std::string(s.substr(1, s.size() - 2));
  return std::string(s);
}

// Splits on commas outside quotes.
std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  char quote = 0;
  for (char c : line) {
    if (quote) {
      if (c == quote) quote = 0;
      cur += c;
    } else if (c == '\'' || c == '"') {
      quote = c;
      cur += c;
    } else if (c == ',') {
      out.push_back(unquote(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(unquote(cur));
  return out;
}

double parse_number(const std::string& s, std::size_t line) {
  double v = 0.0;
  const char* begin = s.data();
  if (!s.empty() && s.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    if (s == "?") throw ParseError("missing values are not supported", line);
    throw ParseError("invalid numeric value '" + s + "'", line);
  }
  return v;
}

std::uint32_t nominal_index(const std::vector<std::string>& values, const std::string& s, std::size_t line,
                            const std::string& name) {
  const auto it = std::find(values.begin(), values.end(), s);
  if (it == values.end()) {
    if (s == "?") throw ParseError("missing values are not supported", line);
    throw ParseError("unknown value '" + s + "' for nominal '" + name + "'", line);
  }
  return static_cast<std::uint32_t>(it - values.begin());
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool blank_or_comment(std::string_view s) {
  s = trim(s);
  return s.empty() || s.front() == '%';
}

Instance decode_row(const std::vector<std::string>& fields, std::span<const AttributeInfo> columns,
                    std::size_t class_column, std::size_t line) {
  Instance inst;
  inst.x.reserve(columns.size() - 1);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const AttributeInfo& col = columns[i];
    if (i == class_column) {
      inst.label = nominal_index(col.values, fields[i], line, col.name);
      continue;
    }
    inst.x.push_back(col.is_nominal() ? nominal_index(col.values, fields[i], line, col.name)
                                      : parse_number(fields[i], line));
  }
  return inst;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

fs::path sidecar_path(const fs::path& csv) { return fs::path(csv.string() + ".schema.json"); }

CsvLayout read_sidecar(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open schema descriptor " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("schema descriptor " + path.string() + ": " + e.what());
  }
  try {
    std::vector<AttributeInfo> atts;
    for (const auto& a : j.at("attributes")) {
      const std::string type = a.at("type").get<std::string>();
      const std::string name = a.at("name").get<std::string>();
      if (type == "numeric") {
        atts.push_back(AttributeInfo::numeric(name));
      } else if (type == "nominal") {
        atts.push_back(AttributeInfo::nominal(name, a.at("values").get<std::vector<std::string>>()));
      } else {
        throw ParseError("attribute '" + name + "' has unknown type '" + type + "'");
      }
    }
    auto classes = j.at("class").at("values").get<std::vector<std::string>>();
    const std::size_t column = j.contains("class_column") ? j["class_column"].get<std::size_t>() : atts.size();
    if (column > atts.size()) throw ParseError("class_column out of range in " + path.string());
    return {StreamSchema(std::move(atts), std::move(classes), j.value("relation", std::string("stream"))), column};
  } catch (const json::exception& e) {
    throw ParseError("schema descriptor " + path.string() + ": " + e.what());
  } catch (const SchemaError& e) {
    throw ParseError("schema descriptor " + path.string() + ": " + e.what());
  }
}

void write_sidecar(const fs::path& path, const StreamSchema& schema) {
  json j;
  j["relation"] = schema.relation();
  j["attributes"] = json::array();
  for (const auto& a : schema.attributes()) {
    json e{{"name", a.name}, {"type", a.is_nominal() ? "nominal" : "numeric"}};
    if (a.is_nominal()) e["values"] = a.values;
    j["attributes"].push_back(e);
  }
  j["class"] = {{"name", "class"},
                {"values", std::vector<std::string>(schema.class_names().begin(), schema.class_names().end())}};
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

CsvSource::CsvSource(const fs::path& path) : CsvSource(path, read_sidecar(sidecar_path(path))) {}

CsvSource::CsvSource(const fs::path& path, CsvLayout layout) : layout_(std::move(layout)), in_(path) {
  if (!in_) throw ParseError("cannot open " + path.string());
  const StreamSchema& s = layout_.schema;
  columns_.assign(s.attributes().begin(), s.attributes().end());
  columns_.insert(columns_.begin() + static_cast<std::ptrdiff_t>(layout_.class_column),
                  AttributeInfo::nominal("class", std::vector<std::string>(s.class_names().begin(),
                                                                           s.class_names().end())));
}

std::optional<Instance> CsvSource::next() {
  const StreamSchema& s = layout_.schema;
  const std::size_t width = s.attribute_count() + 1;
  while (std::getline(in_, buffer_)) {
    ++line_;
    if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
    if (trim(buffer_).empty()) continue;
    const auto fields = split_fields(buffer_);
    if (fields.size() != width)
      throw ParseError("expected " + std::to_string(width) + " columns, found " + std::to_string(fields.size()),
                       line_);
    return decode_row(fields, columns_, layout_.class_column, line_);
  }
  return std::nullopt;
}

ArffSource::ArffSource(const fs::path& path, std::optional<std::size_t> class_index) : in_(path) {
  if (!in_) throw ParseError("cannot open " + path.string());
  std::string relation = "stream";
  bool data = false;
  while (!data && std::getline(in_, buffer_)) {
    ++line_;
    if (blank_or_comment(buffer_)) continue;
    std::string_view l = trim(buffer_);
    const std::string head = lower(l.substr(0, l.find_first_of(" \t")));
    if (head == "@relation") {
      relation = unquote(l.substr(9));
    } else if (head == "@attribute") {
      std::string_view rest = trim(l.substr(10));
      std::string name;
      if (!rest.empty() && (rest.front() == '\'' || rest.front() == '"')) {
        const auto close = rest.find(rest.front(), 1);
        if (close == std::string_view::npos) throw ParseError("unterminated attribute name", line_);
        name = std::string(rest.substr(1, close - 1));
        rest = trim(rest.substr(close + 1));
      } else {
        const auto sp = rest.find_first_of(" \t");
        if (sp == std::string_view::npos) throw ParseError("attribute without a type", line_);
        name = std::string(rest.substr(0, sp));
        rest = trim(rest.substr(sp));
      }
      if (!rest.empty() && rest.front() == '{') {
        const auto close = rest.rfind('}');
        if (close == std::string_view::npos) throw ParseError("unterminated nominal domain", line_);
        auto values = split_fields(rest.substr(1, close - 1));
        if (values.size() == 1 && values[0].empty()) throw ParseError("empty nominal domain", line_);
        columns_.push_back(AttributeInfo::nominal(name, std::move(values)));
      } else {
        const std::string type = lower(rest);
        if (type != "numeric" && type != "real" && type != "integer")
          throw ParseError("unsupported attribute type '" + std::string(rest) + "'", line_);
        columns_.push_back(AttributeInfo::numeric(name));
      }
    } else if (head == "@data") {
      data = true;
    } else {
      throw ParseError("unexpected header line '" + std::string(l) + "'", line_);
    }
  }
  if (!data) throw ParseError("no @data section in " + path.string());
  if (columns_.size() < 2) throw ParseError("ARFF needs at least one attribute and a class");
  class_column_ = class_index.value_or(columns_.size() - 1);
  if (class_column_ >= columns_.size()) throw ParseError("class index out of range");
  if (!columns_[class_column_].is_nominal()) throw ParseError("class attribute must be nominal");
  std::vector<AttributeInfo> atts;
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (i != class_column_) atts.push_back(columns_[i]);
  try {
    schema_.emplace(std::move(atts), columns_[class_column_].values, relation);
  } catch (const SchemaError& e) {
    throw ParseError(std::string("invalid ARFF header: ") + e.what());
  }
}

std::optional<Instance> ArffSource::next() {
  while (std::getline(in_, buffer_)) {
    ++line_;
    if (!buffer_.empty() && buffer_.back() == '\r') buffer_.pop_back();
    if (blank_or_comment(buffer_)) continue;
    if (trim(buffer_).front() == '{') throw ParseError("sparse ARFF rows are not supported", line_);
    const auto fields = split_fields(buffer_);
    if (fields.size() != columns_.size())
      throw ParseError("expected " + std::to_string(columns_.size()) + " values, found " +
                           std::to_string(fields.size()),
                       line_);
    return decode_row(fields, columns_, class_column_, line_);
  }
  return std::nullopt;
}

void CsvWriter::write(const Instance& inst) {
  std::string row;
  for (std::size_t i = 0; i < inst.x.size(); ++i) {
    const AttributeInfo& a = schema_.attribute(i);
    row += a.is_nominal() ? a.values[static_cast<std::size_t>(inst.x[i])] : format_double(inst.x[i]);
    row += ',';
  }
  row += schema_.class_names()[inst.label];
  row += '\n';
  out_ << row;
}

}  // namespace goowe
