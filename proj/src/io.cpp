#include "bspec/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "bspec/errors.hpp"

namespace bspec::io {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<int> mask_to_subset(Mask mask) {
  std::vector<int> subset;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) subset.push_back(i + 1);
  return subset;
}

Mask subset_to_mask(std::span<const int> subset, int n) {
  Mask mask = 0;
  int previous = 0;
  for (int i : subset) {
    if (i < 1 || i > n) throw DomainError("subset element " + std::to_string(i) + " outside [1, n]");
    if (i <= previous) throw DomainError("subset elements must be strictly ascending");
    mask |= Mask{1} << (i - 1);
    previous = i;
  }
  return mask;
}

json spectrum_to_json(const FourierSpectrum& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients())
    coeffs.push_back({{"subset", mask_to_subset(c.mask)}, {"value", c.value}});
  return {{"n", s.dimension()}, {"coefficients", std::move(coeffs)}};
}

FourierSpectrum spectrum_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Coefficient> coeffs;
    std::set<Mask> seen;
    for (const auto& entry : j.at("coefficients")) {
      const auto subset = entry.at("subset").get<std::vector<int>>();
      const Mask mask = subset_to_mask(subset, n);
      if (!seen.insert(mask).second) throw DomainError("duplicate subset in spectrum JSON");
      coeffs.push_back({mask, entry.at("value").get<double>()});
    }
    return FourierSpectrum(n, std::move(coeffs));
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid spectrum JSON: ") + e.what(), 0);
  }
}

void write_truth_table(std::ostream& out, const BooleanFunction& f) {
  out << "n=" << f.dimension() << '\n';
  const auto values = f.values();
  for (std::size_t r = 0; r < values.size(); ++r) {
    out << format_double(values[r]);
    out << ((r + 1) % 8 == 0 || r + 1 == values.size() ? '\n' : ' ');
  }
}

BooleanFunction read_truth_table(std::istream& in) {
  std::string line;
  int line_no = 0;
  int n = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const std::string header = line.substr(first);
    if (header.rfind("n=", 0) != 0) throw ParseError("expected header \"n=<int>\"", line_no);
    std::istringstream hs(header.substr(2));
    if (!(hs >> n)) throw ParseError("header dimension is not an integer", line_no);
    std::string rest;
    if (hs >> rest) throw ParseError("trailing text after header", line_no);
    break;
  }
  if (n < 0) throw ParseError("missing header \"n=<int>\"", line_no);
  BooleanFunction::check_dense_dimension(n);

  const std::size_t expected = std::size_t{1} << n;
  std::vector<double> values;
  values.reserve(expected);
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string token;
    while (ls >> token) {
      std::size_t used = 0;
      double v;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        throw ParseError("not a number: \"" + token + "\"", line_no);
      }
      if (used != token.size()) throw ParseError("not a number: \"" + token + "\"", line_no);
      if (!std::isfinite(v)) throw ParseError("non-finite value", line_no);
      if (values.size() == expected) throw ParseError("more than 2^n values", line_no);
      values.push_back(v);
    }
  }
  if (values.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " values, found " +
                         std::to_string(values.size()),
                     line_no);
  return BooleanFunction(n, std::move(values));
}

json report_to_json(const InequalityReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  if (!r.asserted) params["asserted"] = 0;
  json j = {{"name", r.name}, {"lhs", r.lhs},  {"rhs", r.rhs},       {"ratio", r.ratio},
            {"pass", r.pass}, {"tol", r.tol},  {"witness", nullptr}, {"params", std::move(params)}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

InequalityReport report_from_json(const json& j) {
  try {
    InequalityReport r;
    r.name = j.at("name").get<std::string>();
    auto number = [&](const char* key) {
      const auto& v = j.at(key);
      return v.is_null() ? std::nan("") : v.get<double>();
    };
    r.lhs = number("lhs");
    r.rhs = number("rhs");
    r.ratio = number("ratio");
    r.pass = j.at("pass").get<bool>();
    r.tol = j.at("tol").get<double>();
    if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) {
      if (k == "asserted") {
        r.asserted = v.get<double>() != 0.0;
        continue;
      }
      r.params[k] = v.get<double>();
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what(), 0);
  }
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_reports_csv(std::ostream& out, std::span<const InequalityReport> reports) {
  std::set<std::string> keys;
  for (const auto& r : reports)
    for (const auto& [k, v] : r.params) keys.insert(k);
  out << "name,lhs,rhs,ratio,pass,tol,asserted,witness";
  for (const auto& k : keys) out << ',' << k;
  out << '\n';
  for (const auto& r : reports) {
    out << csv_escape(r.name) << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
        << format_double(r.ratio) << ',' << (r.pass ? 1 : 0) << ',' << format_double(r.tol) << ','
        << (r.asserted ? 1 : 0) << ',' << csv_escape(r.witness.value_or(""));
    for (const auto& k : keys) {
      out << ',';
      if (auto it = r.params.find(k); it != r.params.end()) out << format_double(it->second);
    }
    out << '\n';
  }
}

}  // namespace bspec::io
