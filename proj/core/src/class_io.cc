// Copyright 2026 The scaledim Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scaledim/class_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "scaledim/error.h"

namespace scaledim {
namespace {

using nlohmann::json;

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
}

const json& Field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    Fail(ErrorCode::kParse, std::string("missing field \"") + key + "\"");
  }
  return obj.at(key);
}

std::int64_t AsInt(const json& v, const char* what) {
  if (!v.is_number_integer()) {
    Fail(ErrorCode::kParse, std::string(what) + " must be an integer");
  }
  return v.get<std::int64_t>();
}

const json& AsArray(const json& v, const char* what) {
  if (!v.is_array()) {
    Fail(ErrorCode::kParse, std::string(what) + " must be an array");
  }
  return v;
}

Rational AsRational(const json& v, const char* what) {
  try {
    if (v.is_string()) return Rational::Parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_array() && v.size() == 2 && v[0].is_number_integer() &&
        v[1].is_number_integer()) {
      return Rational(v[0].get<std::int64_t>(), v[1].get<std::int64_t>());
    }
  } catch (const Error& e) {
    Fail(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
  Fail(ErrorCode::kParse,
       std::string(what) + " must be \"p/q\" or a [num, den] pair");
}

// Library validation failures on parsed content are parse errors here.
template <typename Fn>
auto Convert(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) {
      Fail(ErrorCode::kParse, e.what());
    }
    throw;
  }
}

ValueMatrix MatrixFrom(const json& j) {
  const std::int64_t den = AsInt(Field(j, "denominator"), "denominator");
  std::vector<std::vector<std::int64_t>> rows;
  for (const json& r : AsArray(Field(j, "functions"), "functions")) {
    std::vector<std::int64_t> row;
    for (const json& v : AsArray(r, "function row")) {
      row.push_back(AsInt(v, "numerator"));
    }
    rows.push_back(std::move(row));
  }
  return Convert([&] { return ValueMatrix::FromRows(den, rows); });
}

std::string RationalPair(const Rational& r) {
  return "[" + std::to_string(r.num()) + ", " + std::to_string(r.den()) + "]";
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) Fail(ErrorCode::kIo, "error reading " + path);
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorCode::kIo, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) Fail(ErrorCode::kIo, "error writing " + path);
}

FunctionClass ParseClass(std::string_view text) {
  const json j = ParseJson(text);
  ValueMatrix m = MatrixFrom(j);
  std::vector<std::string> domain;
  for (const json& v : AsArray(Field(j, "domain"), "domain")) {
    if (!v.is_string()) Fail(ErrorCode::kParse, "domain labels are strings");
    domain.push_back(v.get<std::string>());
  }
  if (m.rows() == 0 && !domain.empty()) {
    m = ValueMatrix(m.denominator(), domain.size(), {});
  }
  return Convert([&] { return FunctionClass(std::move(domain), std::move(m)); });
}

std::string ClassToJson(const FunctionClass& f) {
  json domain = f.domain();
  std::string out = "{\n  \"denominator\": " +
                    std::to_string(f.denominator()) + ",\n  \"domain\": " +
                    domain.dump() + ",\n  \"functions\": [";
  for (std::size_t i = 0; i < f.num_functions(); ++i) {
    out += i == 0 ? "\n    [" : ",\n    [";
    for (std::size_t p = 0; p < f.num_points(); ++p) {
      if (p > 0) out += ", ";
      out += std::to_string(f.numerator(i, p));
    }
    out += "]";
  }
  out += f.num_functions() == 0 ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

FunctionClass LoadClass(const std::string& path) {
  return ParseClass(ReadFile(path));
}

ValueMatrix ParseMatrix(std::string_view text) {
  return MatrixFrom(ParseJson(text));
}

ValueMatrix LoadMatrix(const std::string& path) {
  return ParseMatrix(ReadFile(path));
}

DiscreteDistribution ParseDistribution(std::string_view text) {
  const json j = ParseJson(text);
  std::vector<Rational> w;
  for (const json& v : AsArray(Field(j, "weights"), "weights")) {
    w.push_back(AsRational(v, "weight"));
  }
  return Convert([&] { return DiscreteDistribution(std::move(w)); });
}

std::string DistributionToJson(const DiscreteDistribution& d) {
  std::string out = "{\"weights\": [";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ", ";
    out += RationalPair(d.weight(i));
  }
  return out + "]}\n";
}

DiscreteDistribution LoadDistribution(const std::string& path) {
  return ParseDistribution(ReadFile(path));
}

LabeledSample ParsePrefix(std::string_view text) {
  const json j = ParseJson(text);
  const json& points = AsArray(Field(j, "points"), "points");
  const json& labels = AsArray(Field(j, "labels"), "labels");
  if (points.size() != labels.size()) {
    Fail(ErrorCode::kParse, "points and labels differ in length");
  }
  LabeledSample s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::int64_t p = AsInt(points[i], "point");
    if (p < 0) Fail(ErrorCode::kParse, "point indices are non-negative");
    s.push_back({static_cast<PointIndex>(p), AsRational(labels[i], "label")});
  }
  return s;
}

LabeledSample LoadPrefix(const std::string& path) {
  return ParsePrefix(ReadFile(path));
}

JointSample ParseJointSample(std::string_view text) {
  const json j = ParseJson(text);
  std::vector<LabeledPoint> support;
  for (const json& z : AsArray(Field(j, "support"), "support")) {
    if (!z.is_array() || z.size() != 2) {
      Fail(ErrorCode::kParse, "support entries are [point, label] pairs");
    }
    const std::int64_t p = AsInt(z[0], "point");
    if (p < 0) Fail(ErrorCode::kParse, "point indices are non-negative");
    support.push_back({static_cast<PointIndex>(p), AsRational(z[1], "label")});
  }
  std::vector<Rational> w;
  for (const json& v : AsArray(Field(j, "weights"), "weights")) {
    w.push_back(AsRational(v, "weight"));
  }
  return Convert([&] { return JointSample(std::move(support), std::move(w)); });
}

std::string JointSampleToJson(const JointSample& p) {
  std::string out = "{\"support\": [";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + std::to_string(p.support()[i].point) + ", \"" +
           p.support()[i].label.str() + "\"]";
  }
  out += "], \"weights\": [";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ", ";
    out += RationalPair(p.weights()[i]);
  }
  return out + "]}\n";
}

JointSample LoadJointSample(const std::string& path) {
  return ParseJointSample(ReadFile(path));
}

}  // namespace scaledim
