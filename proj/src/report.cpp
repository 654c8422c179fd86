// Copyright 2026 The hypcap authors
//
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

#include "hypcap/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace hypcap {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

namespace {

constexpr const char* kHeader =
    "scenario,space,s,depth,p,mode,lp_value,weak_value,witness_value,"
    "lower_bound,status";

double parse_double_field(const std::string& s, const std::string& context) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw config_error("bad numeric field in " + context + ": " + s);
  }
  if (pos != s.size()) {
    throw config_error("bad numeric field in " + context + ": " + s);
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string row_key(const SummaryRow& r) {
  std::ostringstream os;
  os << r.scenario << "/" << r.space << "/d" << r.depth << "/p"
     << format_double(r.p) << "/" << r.mode;
  return os.str();
}

}  // namespace

void write_summary_csv(const std::string& path,
                       const std::vector<SummaryRow>& rows) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write summary csv: " + path);
  out << "# " << kSummarySchema << "\n";
  out << kHeader << "\n";
  for (const auto& r : rows) {
    out << r.scenario << "," << r.space << "," << format_double(r.s) << ","
        << r.depth << "," << format_double(r.p) << "," << r.mode << ","
        << format_double(r.lp_value) << "," << format_double(r.weak_value)
        << "," << format_double(r.witness_value) << ","
        << format_double(r.lower_bound) << "," << r.status << "\n";
  }
  if (!out) throw io_error("write failed: " + path);
}

std::vector<SummaryRow> read_summary_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open summary csv: " + path);
  std::string line;
  if (!std::getline(in, line)) throw config_error("empty summary csv: " + path);
  if (line != std::string("# ") + kSummarySchema) {
    throw config_error("summary schema mismatch in " + path + ": " + line);
  }
  if (!std::getline(in, line) || line != kHeader) {
    throw config_error("summary header mismatch in " + path);
  }
  std::vector<SummaryRow> rows;
  int lineno = 2;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto f = split_csv(line);
    if (f.size() != 11) {
      throw config_error(path + ":" + std::to_string(lineno) +
                         ": expected 11 fields, got " +
                         std::to_string(f.size()));
    }
    std::string ctx = path + ":" + std::to_string(lineno);
    SummaryRow r;
    r.scenario = f[0];
    r.space = f[1];
    r.s = parse_double_field(f[2], ctx);
    r.depth = static_cast<int>(parse_double_field(f[3], ctx));
    r.p = parse_double_field(f[4], ctx);
    r.mode = f[5];
    r.lp_value = parse_double_field(f[6], ctx);
    r.weak_value = parse_double_field(f[7], ctx);
    r.witness_value = parse_double_field(f[8], ctx);
    r.lower_bound = parse_double_field(f[9], ctx);
    r.status = f[10];
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_detail_json(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write detail json: " + path);
  out << doc.dump(2) << "\n";
  if (!out) throw io_error("write failed: " + path);
}

Json read_detail_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open detail json: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw config_error("bad json in " + path + ": " + e.what());
  }
  return doc;
}

Json certificate_to_json(const StoredCertificate& cert) {
  Json j;
  j["kind"] = cert.kind;
  j["p"] = cert.p;
  j["depth"] = cert.depth;
  j["values"] = cert.values;
  return j;
}

StoredCertificate certificate_from_json(const Json& j) {
  StoredCertificate cert;
  try {
    cert.kind = j.at("kind").get<std::string>();
    cert.p = j.at("p").get<double>();
    cert.depth = j.at("depth").get<int>();
    cert.values = j.at("values").get<std::vector<double>>();
  } catch (const std::exception& e) {
    throw config_error(std::string("bad certificate json: ") + e.what());
  }
  return cert;
}

CompareReport compare_summaries(const std::vector<SummaryRow>& a,
                                const std::vector<SummaryRow>& b,
                                double slack) {
  if (!(slack >= 1.0)) throw precondition_error("compare slack must be >= 1");
  std::map<std::string, const SummaryRow*> bmap;
  for (const auto& r : b) bmap[row_key(r)] = &r;
  std::map<std::string, bool> seen_b;
  CompareReport rep;
  for (const auto& ra : a) {
    std::string key = row_key(ra);
    auto it = bmap.find(key);
    if (it == bmap.end()) {
      rep.only_a.push_back(key);
      continue;
    }
    seen_b[key] = true;
    const SummaryRow& rb = *it->second;
    CompareRow row;
    row.key = key;
    row.lp_a = ra.lp_value;
    row.lp_b = rb.lp_value;
    row.weak_a = ra.weak_value;
    row.weak_b = rb.weak_value;
    auto ratio = [](double x, double y) {
      if (std::isnan(x) && std::isnan(y)) return 1.0;
      if (x == 0.0 && y == 0.0) return 1.0;
      return y / x;
    };
    row.lp_ratio = ratio(ra.lp_value, rb.lp_value);
    row.weak_ratio = ratio(ra.weak_value, rb.weak_value);
    auto outside = [slack](double r) {
      return !(r >= 1.0 / slack && r <= slack);
    };
    row.flagged = outside(row.lp_ratio) || outside(row.weak_ratio);
    if (row.flagged) ++rep.flagged_count;
    rep.rows.push_back(row);
  }
  for (const auto& r : b) {
    std::string key = row_key(r);
    if (!seen_b.count(key)) rep.only_b.push_back(key);
  }
  return rep;
}

std::string render_compare(const CompareReport& rep) {
  std::ostringstream os;
  os << "key,lp_a,lp_b,lp_ratio,weak_a,weak_b,weak_ratio,flag\n";
  for (const auto& r : rep.rows) {
    os << r.key << "," << format_double(r.lp_a) << "," << format_double(r.lp_b)
       << "," << format_double(r.lp_ratio) << "," << format_double(r.weak_a)
       << "," << format_double(r.weak_b) << "," << format_double(r.weak_ratio)
       << "," << (r.flagged ? "RATIO" : "ok") << "\n";
  }
  for (const auto& k : rep.only_a) os << "# only in first: " << k << "\n";
  for (const auto& k : rep.only_b) os << "# only in second: " << k << "\n";
  os << "# flagged " << rep.flagged_count << " of " << rep.rows.size()
     << " rows\n";
  return os.str();
}

}  // namespace hypcap
