#include "concvec/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace concvec::io {

namespace {

using nlohmann::json;

std::size_t line_at_byte(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  for (std::size_t k = 0; k < byte; ++k) {
    if (text[k] == '\n') ++line;
  }
  return line;
}

// Line of the n-th (0-based) occurrence of "key" as a JSON key; 0 if absent.
std::size_t line_of_key(std::string_view text, std::string_view key, std::size_t nth = 0) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  std::size_t pos = text.find(quoted);
  for (std::size_t k = 0; k < nth && pos != std::string_view::npos; ++k) {
    pos = text.find(quoted, pos + quoted.size());
  }
  return pos == std::string_view::npos ? 0 : line_at_byte(text, pos);
}

std::size_t as_index(const json& v, std::size_t line, const std::string& what) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(line, what + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

double as_real(const json& v, std::size_t line, const std::string& what) {
  if (!v.is_number()) throw FormatError(line, what + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw FormatError(line, what + " must be finite");
  return d;
}

}  // namespace

PureState parse_state(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(line_at_byte(text, e.byte ? e.byte - 1 : 0), "malformed JSON");
  }
  if (!doc.is_object()) throw FormatError(1, "state document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "dims" && key != "amps" && key != "normalize") {
      throw FormatError(line_of_key(text, key), "unknown key '" + key + "'");
    }
  }
  if (!doc.contains("dims")) throw FormatError(0, "missing key 'dims'");
  if (!doc.contains("amps")) throw FormatError(0, "missing key 'amps'");

  const std::size_t dims_line = line_of_key(text, "dims");
  const json& jdims = doc["dims"];
  if (!jdims.is_array() || jdims.empty()) {
    throw FormatError(dims_line, "'dims' must be a non-empty array of integers >= 2");
  }
  Dims dims;
  for (const auto& d : jdims) {
    const std::size_t n = as_index(d, dims_line, "'dims' entry");
    if (n < 2) throw FormatError(dims_line, "'dims' entries must be >= 2");
    dims.push_back(n);
  }

  bool normalize = false;
  if (doc.contains("normalize")) {
    if (!doc["normalize"].is_boolean()) {
      throw FormatError(line_of_key(text, "normalize"), "'normalize' must be true or false");
    }
    normalize = doc["normalize"].get<bool>();
  }

  const json& jamps = doc["amps"];
  if (!jamps.is_array()) throw FormatError(line_of_key(text, "amps"), "'amps' must be an array");
  std::vector<Amplitude> entries;
  for (std::size_t r = 0; r < jamps.size(); ++r) {
    const json& rec = jamps[r];
    const std::size_t line = line_of_key(text, "idx", r);
    const std::string where = "'amps' record " + std::to_string(r);
    if (!rec.is_object()) throw FormatError(line, where + " must be an object");
    for (const auto& [key, value] : rec.items()) {
      if (key != "idx" && key != "re" && key != "im") {
        throw FormatError(line, where + ": unknown key '" + key + "'");
      }
    }
    if (!rec.contains("idx") || !rec["idx"].is_array()) {
      throw FormatError(line, where + ": 'idx' must be an array");
    }
    MultiIndex idx;
    for (const auto& v : rec["idx"]) idx.push_back(as_index(v, line, where + " 'idx'"));
    if (idx.size() != dims.size()) {
      throw FormatError(line, where + ": 'idx' has " + std::to_string(idx.size()) +
                                  " components, expected " + std::to_string(dims.size()));
    }
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] >= dims[k]) throw FormatError(line, where + ": 'idx' out of range");
    }
    const double re = rec.contains("re") ? as_real(rec["re"], line, where + " 're'") : 0.0;
    const double im = rec.contains("im") ? as_real(rec["im"], line, where + " 'im'") : 0.0;
    entries.push_back({std::move(idx), Complex(re, im)});
  }

  try {
    return make_state(dims, entries, normalize);
  } catch (const std::exception& e) {
    throw FormatError(line_of_key(text, "amps"), e.what());
  }
}

PureState read_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 12);
  if (ec != std::errc{}) return "nan";
  std::string out(buf, end);
  if (out.find_first_not_of("-0.") == std::string::npos && out.front() == '-') out.erase(0, 1);
  return out;
}

double round_printed(double value) {
  const std::string s = format_number(value);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

std::string format_state(const PureState& psi) {
  std::ostringstream os;
  os << "{\n  \"dims\": [";
  for (std::size_t k = 0; k < psi.dims().size(); ++k) {
    os << (k ? ", " : "") << psi.dims()[k];
  }
  os << "],\n  \"normalize\": false,\n  \"amps\": [";
  bool first = true;
  for (std::size_t x = 0; x < psi.size(); ++x) {
    const Complex a = psi[x];
    if (format_number(std::abs(a)) == format_number(0.0)) continue;
    os << (first ? "\n" : ",\n") << "    {\"idx\": [";
    const MultiIndex idx = unflatten(psi.dims(), x);
    for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? ", " : "") << idx[k];
    os << "], \"re\": " << format_number(a.real()) << ", \"im\": " << format_number(a.imag())
       << "}";
    first = false;
  }
  os << "\n  ]\n}\n";
  return os.str();
}

void write_state_file(const std::string& path, const PureState& psi) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(0, "cannot write '" + path + "'");
  out << format_state(psi);
  if (!out) throw FormatError(0, "failed writing '" + path + "'");
}

}  // namespace concvec::io
