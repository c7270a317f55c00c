#include "cmreg/report_format.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cmreg {

namespace {

using nlohmann::ordered_json;

// Finite values that fit in 64 bits become JSON numbers; huge bounds and
// sentinels become strings.
ordered_json value_json(const ExtendedInt& v) {
  if (v.is_finite() && v.value().fits_slong_p()) return v.value().get_si();
  return v.to_string();
}

ordered_json value_json(const mpz_class& v) { return value_json(ExtendedInt(v)); }

const char* direction_name(Direction d) {
  switch (d) {
    case Direction::kAtMost: return "<=";
    case Direction::kLessThan: return "<";
    case Direction::kAtLeast: return ">=";
    case Direction::kEqual: return "==";
  }
  return "?";
}

const char* status_name(const BoundCheck& c) {
  return c.skipped() ? "skipped" : c.passed() ? "pass" : "FAIL";
}

ordered_json profile_json(const CohomologyProfile& p) {
  ordered_json out;
  out["dim"] = value_json(p.dim());
  out["depth"] = value_json(p.depth());
  out["beg"] = value_json(p.beg());
  out["gendeg"] = value_json(p.gendeg());
  out["reg"] = value_json(p.reg());
  ordered_json reg_k = ordered_json::object();
  ordered_json a = ordered_json::object();
  ordered_json def_reg = ordered_json::object();
  for (int i = 0; i <= p.num_variables(); ++i) {
    reg_k[std::to_string(i)] = value_json(p.reg(i));
    a[std::to_string(i)] = value_json(p.a(i));
    def_reg[std::to_string(i)] = value_json(p.deficiency(i).regularity());
  }
  out["reg_k"] = reg_k;
  out["a"] = a;
  out["deficiency_reg"] = def_reg;
  ordered_json diag = ordered_json::array();
  for (const auto& v : p.diagonal()) diag.push_back(value_json(v));
  out["diagonal"] = diag;
  ordered_json e = ordered_json::array();
  for (const auto& v : p.module().hilbert_coefficients().values) e.push_back(value_json(v));
  out["e"] = e;
  out["hilbert_polynomial"] = p.module().hilbert_polynomial().to_string("n");
  out["postulation"] = value_json(p.module().postulation());
  ordered_json nu = ordered_json::object();
  ordered_json nu_dual = ordered_json::object();
  for (int i = 0; i < p.num_variables(); ++i) {
    nu[std::to_string(i)] = value_json(p.nu(i));
    nu_dual[std::to_string(i)] = value_json(p.nu_from_duality(i));
  }
  out["nu"] = nu;
  out["nu_from_duality"] = nu_dual;
  return out;
}

ordered_json check_json(const BoundCheck& c) {
  ordered_json out;
  out["id"] = c.id;
  out["ref"] = c.ref;
  if (c.skipped()) {
    out["skipped"] = true;
    out["note"] = c.note;
    return out;
  }
  out["lhs_name"] = c.lhs_name;
  out["lhs"] = value_json(c.lhs);
  out["relation"] = direction_name(c.direction);
  out["rhs_name"] = c.rhs_name;
  out["rhs"] = value_json(c.rhs);
  out["margin"] = value_json(c.margin());
  out["pass"] = c.passed();
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch;
  }
  return out;
}

std::string text(const ordered_json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  if (name == "md") return Format::kMarkdown;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or md)");
}

std::string format_report(const Report& report, Format format, const FormatOptions& options) {
  long passed = 0, failed = 0, skipped = 0;
  for (const auto& c : report.checks) {
    if (c.skipped()) ++skipped; else if (c.passed()) ++passed; else ++failed;
  }
  std::ostringstream out;
  switch (format) {
    case Format::kJson: {
      ordered_json j;
      j["input"] = options.input;
      j["profile"] = profile_json(*report.profile);
      j["window"] = {report.window.first, report.window.second};
      j["filter_regular_form"] = report.filter_regular_form.empty()
                                     ? ordered_json(nullptr)
                                     : ordered_json(report.filter_regular_form);
      ordered_json checks = ordered_json::array();
      for (const auto& c : report.checks) checks.push_back(check_json(c));
      j["checks"] = checks;
      j["summary"] = {{"passed", passed}, {"failed", failed}, {"skipped", skipped}};
      ordered_json meta;
      meta["field"] = options.field;
      if (options.timings) meta["wall_time_ms"] = report.wall_time_ms;
      j["meta"] = meta;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv: {
      out << "id,status,lhs_name,lhs,relation,rhs_name,rhs,margin,note\n";
      for (const auto& c : report.checks) {
        out << csv_field(c.id) << "," << status_name(c) << ",";
        if (c.skipped()) {
          out << ",,,,,," << csv_field(c.note) << "\n";
          continue;
        }
        out << csv_field(c.lhs_name) << "," << c.lhs.to_string() << "," << direction_name(c.direction)
            << "," << csv_field(c.rhs_name) << "," << c.rhs.to_string() << ","
            << c.margin().to_string() << ",\n";
      }
      break;
    }
    case Format::kMarkdown: {
      const ordered_json p = profile_json(*report.profile);
      out << "# Verification report\n\n";
      out << "input: `" << options.input << "` over " << options.field << "\n\n";
      out << "| dim | depth | beg | gendeg | reg | postulation |\n|---|---|---|---|---|---|\n";
      out << "| " << text(p["dim"]) << " | " << text(p["depth"]) << " | " << text(p["beg"]) << " | "
          << text(p["gendeg"]) << " | " << text(p["reg"]) << " | " << text(p["postulation"]) << " |\n\n";
      if (!report.filter_regular_form.empty()) {
        out << "filter-regular form: `" << report.filter_regular_form << "`\n\n";
      }
      out << "| check | status | lhs | rel | rhs | margin | note |\n|---|---|---|---|---|---|---|\n";
      for (const auto& c : report.checks) {
        out << "| " << md_cell(c.id) << " | " << status_name(c) << " | ";
        if (c.skipped()) {
          out << " | | | | " << md_cell(c.note) << " |\n";
          continue;
        }
        out << md_cell(c.lhs_name) << " = " << c.lhs.to_string() << " | "
            << md_cell(direction_name(c.direction)) << " | " << md_cell(c.rhs_name) << " = "
            << c.rhs.to_string() << " | " << c.margin().to_string() << " | |\n";
      }
      out << "\n" << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
      if (options.timings) out << "\nwall time: " << report.wall_time_ms << " ms\n";
      break;
    }
  }
  return out.str();
}

std::string format_analysis(const CohomologyProfile& profile, std::pair<int, int> window,
                            Format format, const FormatOptions& options) {
  const int dp = profile.num_variables();
  std::ostringstream out;
  switch (format) {
    case Format::kJson: {
      ordered_json j;
      j["input"] = options.input;
      j["profile"] = profile_json(profile);
      ordered_json betti = ordered_json::array();
      for (const auto& [key, count] : profile.module().betti().entries) {
        betti.push_back({{"i", key.first}, {"j", key.second}, {"beta", count}});
      }
      j["betti"] = betti;
      j["window"] = {window.first, window.second};
      ordered_json table = ordered_json::array();
      for (int n = window.first; n <= window.second; ++n) {
        ordered_json row;
        row["n"] = n;
        row["length"] = value_json(profile.module().hilbert_function(n));
        row["p"] = profile.module().hilbert_polynomial()(n).get_str();
        ordered_json h = ordered_json::array();
        for (int i = 0; i <= dp; ++i) h.push_back(value_json(profile.h(i, n)));
        row["h"] = h;
        ordered_json d = ordered_json::array();
        for (int i = 0; i < dp; ++i) d.push_back(value_json(profile.d(i, n)));
        row["d"] = d;
        table.push_back(row);
      }
      j["table"] = table;
      j["meta"] = {{"field", options.field}};
      out << j.dump(2) << "\n";
      break;
    }
    case Format::kCsv: {
      out << "n,length,p";
      for (int i = 0; i <= dp; ++i) out << ",h" << i;
      for (int i = 0; i < dp; ++i) out << ",d" << i;
      out << "\n";
      for (int n = window.first; n <= window.second; ++n) {
        out << n << "," << profile.module().hilbert_function(n).get_str() << ","
            << profile.module().hilbert_polynomial()(n).get_str();
        for (int i = 0; i <= dp; ++i) out << "," << profile.h(i, n).get_str();
        for (int i = 0; i < dp; ++i) out << "," << profile.d(i, n).get_str();
        out << "\n";
      }
      break;
    }
    case Format::kMarkdown: {
      const ordered_json p = profile_json(profile);
      out << "# Module profile\n\n";
      out << "input: `" << options.input << "` over " << options.field << "\n\n";
      out << "| invariant | value |\n|---|---|\n";
      for (const auto& key : {"dim", "depth", "beg", "gendeg", "reg", "hilbert_polynomial",
                              "postulation"}) {
        out << "| " << key << " | " << text(p[key]) << " |\n";
      }
      for (const auto& key : {"reg_k", "a", "deficiency_reg", "nu", "nu_from_duality"}) {
        for (const auto& [i, v] : p[key].items()) {
          out << "| " << key << "[" << i << "] | " << text(v) << " |\n";
        }
      }
      out << "| diagonal | " << p["diagonal"].dump() << " |\n";
      out << "| e | " << p["e"].dump() << " |\n\n";
      out << "## Betti table\n\n| i | j | beta |\n|---|---|---|\n";
      for (const auto& [key, count] : profile.module().betti().entries) {
        out << "| " << key.first << " | " << key.second << " | " << count << " |\n";
      }
      out << "\n## Cohomology table\n\n| n | length | p |";
      for (int i = 0; i <= dp; ++i) out << " h" << i << " |";
      for (int i = 0; i < dp; ++i) out << " d" << i << " |";
      out << "\n|---|---|---|";
      for (int i = 0; i < 2 * dp + 1; ++i) out << "---|";
      out << "\n";
      for (int n = window.first; n <= window.second; ++n) {
        out << "| " << n << " | " << profile.module().hilbert_function(n).get_str() << " | "
            << profile.module().hilbert_polynomial()(n).get_str() << " |";
        for (int i = 0; i <= dp; ++i) out << " " << profile.h(i, n).get_str() << " |";
        for (int i = 0; i < dp; ++i) out << " " << profile.d(i, n).get_str() << " |";
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

}  // namespace cmreg
