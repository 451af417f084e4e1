#include "ovk/cli.hpp"
#include "ovk/errors.hpp"
#include "ovk/hodge.hpp"
#include "ovk/localization.hpp"

#include <cstdlib>
#include <sstream>
#include <thread>

namespace ovk::cli {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw InvalidArgument("unknown format '" + name + "'");
}

unsigned worker_count() {
  unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("OVK_THREADS")) {
    char* end = nullptr;
    const long requested = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && requested > 0) return static_cast<unsigned>(requested);
  }
  return hardware;
}

Json rational_json(const Rational& value) {
  return Json{{"num", value.numerator_str()}, {"den", value.denominator_str()}};
}

Rational rational_from_json(const Json& value) {
  if (!value.is_object() || !value.contains("num") || !value.contains("den")) {
    throw InvalidArgument("rational must be {\"num\", \"den\"}");
  }
  return Rational::from_parts(value.at("num").get<std::string>(), value.at("den").get<std::string>());
}

Json invariant_row(const OpenInvariantKey& key, const Rational& value, const std::string& path) {
  Json row;
  row["g"] = key.genus();
  row["h"] = key.boundaries();
  row["d"] = key.degree();
  row["parts"] = key.parts();
  row["a"] = key.framing();
  row["value"] = rational_json(value);
  row["path"] = path;
  return row;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("num") && v.contains("den")) {
    return rational_from_json(v).str();
  }
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + scalar_text(v[i]);
    return out;
  }
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

std::string render(const Json& header, const std::vector<Json>& rows, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      Json doc = header.is_null() ? Json::object() : header;
      doc["rows"] = rows;
      os << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      if (rows.empty()) break;
      std::vector<std::string> columns;
      for (const auto& [k, v] : rows.front().items()) {
        if (v.is_object() && v.contains("num")) {
          columns.push_back(k + "_num");
          columns.push_back(k + "_den");
        } else {
          columns.push_back(k);
        }
      }
      for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
      os << "\n";
      for (const auto& row : rows) {
        bool first = true;
        for (const auto& [k, v] : row.items()) {
          if (v.is_object() && v.contains("num")) {
            os << (first ? "" : ",") << v.at("num").get<std::string>() << "," << v.at("den").get<std::string>();
          } else {
            os << (first ? "" : ",") << csv_escape(scalar_text(v));
          }
          first = false;
        }
        os << "\n";
      }
      break;
    }
    case Format::Text: {
      for (const auto& row : rows) {
        bool first = true;
        for (const auto& [k, v] : row.items()) {
          os << (first ? "" : " ") << k << "=" << scalar_text(v);
          first = false;
        }
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

std::vector<Json> bg_rows(int gmax) {
  if (gmax < 0) throw InvalidArgument("--gmax must be >= 0");
  const BgTable table = bg_table(gmax);
  std::vector<Json> rows;
  for (int g = 0; g <= gmax; ++g) {
    Json row;
    row["g"] = g;
    row["value"] = rational_json(table[g]);
    row["path"] = "bg-series";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Json> nd_rows(long framing, int dmax) {
  const IntegerInvariants nd = integer_invariants(dmax, framing);
  std::vector<Json> rows;
  for (int d = 1; d <= dmax; ++d) {
    const Rational& v = nd.values[static_cast<std::size_t>(d - 1)];
    Json row;
    row["a"] = framing;
    row["d"] = d;
    row["value"] = rational_json(v);
    row["integral"] = v.is_integer();
    row["path"] = "integer-invariants";
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Json> open_rows(int genus, int boundaries, int dmin, int dmax, long framing, const std::string& path) {
  if (boundaries < 1 || dmax < 1 || genus < 0) throw InvalidArgument("table open needs g >= 0, h >= 1, dmax >= 1");
  if (path != "closed-form" && path != "localization") throw InvalidArgument("unknown path '" + path + "'");
  std::vector<Json> rows;
  for (int d = std::max(dmin, boundaries); d <= dmax; ++d) {
    for (const auto& parts : partitions_into(d, boundaries)) {
      const auto key = OpenInvariantKey::from_parts(genus, parts, framing);
      const Rational v = path == "closed-form" ? open_invariant(key) : localize_open(key);
      rows.push_back(invariant_row(key, v, path));
    }
  }
  return rows;
}

std::string recompute_table(const Json& document) {
  if (!document.is_object() || !document.contains("table") || !document.contains("rows")) {
    throw InvalidArgument("table document needs \"table\" and \"rows\"");
  }
  const std::string kind = document.at("table").get<std::string>();
  std::vector<Json> rows;
  for (const auto& row : document.at("rows")) {
    if (kind == "bg") {
      const int g = row.at("g").get<int>();
      Json out;
      out["g"] = g;
      out["value"] = rational_json(bg(g));
      out["path"] = "bg-series";
      rows.push_back(std::move(out));
    } else if (kind == "nd") {
      const long a = row.at("a").get<long>();
      const int d = row.at("d").get<int>();
      auto recomputed = nd_rows(a, d);
      rows.push_back(std::move(recomputed.back()));
    } else if (kind == "open") {
      const auto key = OpenInvariantKey(row.at("g").get<int>(), row.at("h").get<int>(), row.at("d").get<int>(),
                                        row.at("parts").get<std::vector<int>>(), row.at("a").get<long>());
      const std::string path = row.at("path").get<std::string>();
      const Rational v = path == "localization" ? localize_open(key) : open_invariant(key);
      rows.push_back(invariant_row(key, v, path == "localization" ? path : "closed-form"));
    } else {
      throw InvalidArgument("unknown table kind '" + kind + "'");
    }
  }
  Json header = document;
  header.erase("rows");
  return render(header, rows, Format::Json);
}

}  // namespace ovk::cli
