#include "coremed/io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace coremed {

namespace {

using nlohmann::json;

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) {
    if (cur.back() == '\r') cur.pop_back();
    lines.push_back(std::move(cur));
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(std::move(cur));
  return out;
}

double parse_double(const std::string& tok, const std::string& where) {
  double v = 0.0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  auto [p, ec] = std::from_chars(b, e, v);
  detail::require(ec == std::errc{} && p == e, "bad numeric field in " + where);
  return v;
}

std::int64_t parse_int(const std::string& tok, const std::string& where) {
  std::int64_t v = 0;
  const char* b = tok.data();
  const char* e = b + tok.size();
  auto [p, ec] = std::from_chars(b, e, v);
  detail::require(ec == std::errc{} && p == e, "bad integer field in " + where);
  return v;
}

// Nonfinite doubles round-trip as strings; JSON numbers cannot carry them.
json encode_double(double v) {
  if (std::isfinite(v)) return json(v);
  return json(format_double(v));
}

double decode_double(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  detail::require(j.is_string(), "bad numeric value in " + where);
  const std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw std::invalid_argument("bad numeric value in " + where);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  detail::require(ec == std::errc{}, "format_double failed");
  return std::string(buf, p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  detail::require(in.good(), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  detail::require(out.good(), "cannot write " + path);
  out << content;
  detail::require(out.good(), "short write to " + path);
}

// ============================================================
// CSV / set files
// ============================================================

PointSet read_points_csv(const std::string& path) {
  const auto lines = split_lines(read_file(path));
  detail::require(lines.size() >= 2, path + ": need a header and at least one row");
  const auto header = split_csv(lines[0]);
  std::ptrdiff_t wcol = -1;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (header[j] == "weight") {
      detail::require(wcol < 0, path + ": duplicate weight column");
      wcol = static_cast<std::ptrdiff_t>(j);
    }
  }
  const std::size_t d = header.size() - (wcol >= 0 ? 1 : 0);
  detail::require(d >= 1, path + ": no coordinate columns");

  PointSet ps = PointSet::zeros(lines.size() - 1, d);
  if (wcol >= 0) ps.weights.assign(ps.n, 1.0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto toks = split_csv(lines[i]);
    detail::require(toks.size() == header.size(), path + ": ragged row");
    std::size_t jj = 0;
    for (std::size_t j = 0; j < toks.size(); ++j) {
      const double v = parse_double(toks[j], path);
      if (static_cast<std::ptrdiff_t>(j) == wcol) {
        detail::require(v > 0.0, path + ": weights must be positive");
        ps.weights[i - 1] = v;
      } else {
        ps.xs[(i - 1) * d + jj++] = v;
      }
    }
  }
  return ps;
}

void write_points_csv(const std::string& path, const PointSet& ps) {
  std::string out;
  for (std::size_t j = 0; j < ps.d; ++j) {
    if (j) out.push_back(',');
    out += "x" + std::to_string(j);
  }
  if (!ps.weights.empty()) out += ",weight";
  out.push_back('\n');
  for (std::size_t i = 0; i < ps.n; ++i) {
    for (std::size_t j = 0; j < ps.d; ++j) {
      if (j) out.push_back(',');
      out += format_double(ps.xs[i * ps.d + j]);
    }
    if (!ps.weights.empty()) {
      out.push_back(',');
      out += format_double(ps.weights[i]);
    }
    out.push_back('\n');
  }
  write_file(path, out);
}

RankingSet read_rankings_csv(const std::string& path) {
  const auto lines = split_lines(read_file(path));
  detail::require(!lines.empty(), path + ": empty rankings file");
  RankingSet rs;
  rs.n = lines.size();
  rs.d = split_csv(lines[0]).size();
  detail::require(rs.d >= 1, path + ": empty ranking row");
  rs.ranks.resize(rs.n * rs.d);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto toks = split_csv(lines[i]);
    detail::require(toks.size() == rs.d, path + ": ragged row");
    for (std::size_t j = 0; j < rs.d; ++j) {
      const std::int64_t v = parse_int(toks[j], path);
      detail::require(v >= 0 && v < static_cast<std::int64_t>(rs.d),
                      path + ": rank out of range");
      rs.ranks[i * rs.d + j] = static_cast<std::int32_t>(v);
    }
    detail::require(is_permutation_row(rs.row(i)), path + ": row is not a permutation");
  }
  return rs;
}

void write_rankings_csv(const std::string& path, const RankingSet& rs) {
  std::string out;
  for (std::size_t i = 0; i < rs.n; ++i) {
    for (std::size_t j = 0; j < rs.d; ++j) {
      if (j) out.push_back(',');
      out += std::to_string(rs.ranks[i * rs.d + j]);
    }
    out.push_back('\n');
  }
  write_file(path, out);
}

SetFamily read_sets_file(const std::string& path) {
  auto lines = split_lines(read_file(path));
  std::size_t d = 0;
  bool have_d = false;
  std::size_t first = 0;
  if (!lines.empty() && !lines[0].empty() && lines[0][0] == '#') {
    std::istringstream hs(lines[0].substr(1));
    std::string tok;
    while (hs >> tok) {
      if (tok.rfind("d=", 0) == 0) {
        d = static_cast<std::size_t>(parse_int(tok.substr(2), path));
        have_d = true;
      }
    }
    first = 1;
  }
  detail::require(lines.size() > first, path + ": no set rows");

  std::vector<std::vector<std::size_t>> rows;
  std::size_t maxe = 0;
  for (std::size_t i = first; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::vector<std::size_t> row;
    std::string tok;
    while (ls >> tok) {
      const auto e = static_cast<std::size_t>(parse_int(tok, path));
      row.push_back(e);
      maxe = std::max(maxe, e + 1);
    }
    rows.push_back(std::move(row));
  }
  if (!have_d) d = std::max<std::size_t>(maxe, 1);
  detail::require(maxe <= d, path + ": element index beyond declared universe");

  SetFamily sf = SetFamily::empty(rows.size(), d);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t e : rows[i]) sf.set(i, e);
  return sf;
}

void write_sets_file(const std::string& path, const SetFamily& sf) {
  std::string out = "# d=" + std::to_string(sf.d) + "\n";
  for (std::size_t i = 0; i < sf.n; ++i) {
    bool any = false;
    for (std::size_t e = 0; e < sf.d; ++e) {
      if (sf.test(i, e)) {
        if (any) out.push_back(' ');
        out += std::to_string(e);
        any = true;
      }
    }
    out.push_back('\n');
  }
  write_file(path, out);
}

// ============================================================
// Content hashes
// ============================================================

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void byte(std::uint8_t b) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) byte(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  template <class C>
  void frame(char tag, const C& inst) {
    byte(static_cast<std::uint8_t>(tag));
    u64(inst.n);
    u64(inst.d);
  }
  template <class C>
  void weights(const C& inst) {
    byte(inst.weights.empty() ? 0 : 1);
    for (double w : inst.weights) f64(w);
  }
};

}  // namespace

std::uint64_t content_hash(const PointSet& ps) {
  Fnv f;
  f.frame('P', ps);
  for (double v : ps.xs) f.f64(v);
  f.weights(ps);
  return f.h;
}

std::uint64_t content_hash(const RankingSet& rs) {
  Fnv f;
  f.frame('R', rs);
  for (std::int32_t v : rs.ranks) f.u64(static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)));
  f.weights(rs);
  return f.h;
}

std::uint64_t content_hash(const SetFamily& sf) {
  Fnv f;
  f.frame('S', sf);
  for (std::uint64_t w : sf.bits) f.u64(w);
  f.weights(sf);
  return f.h;
}

// ============================================================
// Coreset and report JSON
// ============================================================

namespace {

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf, 16);
}

std::uint64_t from_hex64(const std::string& s, const std::string& where) {
  detail::require(s.size() == 16, "bad hash in " + where);
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  detail::require(ec == std::errc{} && p == s.data() + s.size(), "bad hash in " + where);
  return v;
}

}  // namespace

Coreset read_coreset_json(const std::string& path) {
  const json j = json::parse(read_file(path));
  Coreset cs;
  cs.method = j.at("method").get<std::string>();
  cs.seed = j.at("seed").get<std::uint64_t>();
  cs.parent_hash = from_hex64(j.at("parent_hash").get<std::string>(), path);
  cs.indices = j.at("indices").get<std::vector<std::size_t>>();
  cs.weights = j.at("weights").get<std::vector<double>>();
  detail::require(cs.indices.size() == cs.weights.size(), path + ": index/weight mismatch");
  detail::require(j.at("m").get<std::size_t>() == cs.indices.size(),
                  path + ": m does not match indices");
  return cs;
}

void write_coreset_json(const std::string& path, const Coreset& cs) {
  json j;
  j["method"] = cs.method;
  j["seed"] = cs.seed;
  j["parent_hash"] = hex64(cs.parent_hash);
  j["m"] = cs.indices.size();
  j["indices"] = cs.indices;
  j["weights"] = cs.weights;
  write_file(path, j.dump() + "\n");
}

std::string check_report_to_json(const CheckReport& r) {
  json j;
  j["property"] = r.property;
  j["passed"] = r.passed;
  j["measured"] = encode_double(r.measured);
  j["eps"] = encode_double(r.eps);
  j["eta"] = encode_double(r.eta);
  j["witness_a"] = r.witness_a;
  j["witness_b"] = r.witness_b;
  return j.dump();
}

CheckReport check_report_from_json(const std::string& text) {
  const json j = json::parse(text);
  CheckReport r;
  r.property = j.at("property").get<std::string>();
  r.passed = j.at("passed").get<bool>();
  r.measured = decode_double(j.at("measured"), "measured");
  r.eps = decode_double(j.at("eps"), "eps");
  r.eta = decode_double(j.at("eta"), "eta");
  r.witness_a = j.at("witness_a").get<std::int64_t>();
  r.witness_b = j.at("witness_b").get<std::int64_t>();
  return r;
}

}  // namespace coremed
