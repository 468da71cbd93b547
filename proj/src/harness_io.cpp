#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "coverlift/harness.hpp"

namespace coverlift {

namespace {

Json budget_json(const DistanceBudget& b) {
  return Json{{"weight_bound", b.weight_bound}, {"radius", b.radius}, {"descent_steps", b.descent_steps}};
}

DistanceBudget budget_from_json(const Json& j, DistanceBudget b) {
  b.weight_bound = j.value("weight_bound", b.weight_bound);
  b.radius = j.value("radius", b.radius);
  b.descent_steps = j.value("descent_steps", b.descent_steps);
  return b;
}

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<int> int_or_null(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<int>();
}

const std::vector<std::string> kColumns{
    "id",         "genus",     "punctures",    "degree",       "xi_total",       "a",
    "b",          "alpha",     "beta",         "components_a", "components_b",   "ds_lower",
    "ds_upper",   "dsig_lower", "dsig_upper",  "lifted_path_ok", "all_components_ok"};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (quoted) {
      if (ch == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
    } else if (ch != '\r') {
      field += ch;
    }
  }
  if (!field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const ExperimentConfig& c) {
  Json surfaces = Json::array();
  for (const Surface& s : c.surfaces) surfaces.push_back(Json{{"genus", s.genus}, {"punctures", s.punctures}});
  return Json{{"surfaces", std::move(surfaces)},
              {"degrees", c.degrees},
              {"samples", c.samples},
              {"mutation_steps", {c.min_steps, c.max_steps}},
              {"twist_powers", {c.min_power, c.max_power}},
              {"pool_weight", c.pool_weight},
              {"base_budget", budget_json(c.base_budget)},
              {"cover_budget", budget_json(c.cover_budget)},
              {"max_degree", c.max_degree},
              {"seed", c.seed}};
}

ExperimentConfig config_from_json(const Json& j) {
  ExperimentConfig c;
  if (j.contains("surfaces")) {
    c.surfaces.clear();
    for (const Json& s : j["surfaces"]) c.surfaces.push_back(Surface{s.at("genus").get<int>(), s.at("punctures").get<int>()});
  }
  c.degrees = j.value("degrees", c.degrees);
  c.samples = j.value("samples", c.samples);
  if (j.contains("mutation_steps")) {
    c.min_steps = j["mutation_steps"].at(0).get<int>();
    c.max_steps = j["mutation_steps"].at(1).get<int>();
  }
  if (j.contains("twist_powers")) {
    c.min_power = j["twist_powers"].at(0).get<int>();
    c.max_power = j["twist_powers"].at(1).get<int>();
  }
  c.pool_weight = j.value("pool_weight", c.pool_weight);
  if (j.contains("base_budget")) c.base_budget = budget_from_json(j["base_budget"], c.base_budget);
  if (j.contains("cover_budget")) c.cover_budget = budget_from_json(j["cover_budget"], c.cover_budget);
  c.max_degree = j.value("max_degree", c.max_degree);
  c.seed = j.value("seed", c.seed);
  c.check();
  return c;
}

Json record_to_json(const DistortionRecord& r) {
  return Json{{"id", r.id},
              {"genus", r.genus},
              {"punctures", r.punctures},
              {"degree", r.degree},
              {"xi_total", r.xi_total},
              {"a", r.a},
              {"b", r.b},
              {"alpha", r.alpha},
              {"beta", r.beta},
              {"components_a", r.components_a},
              {"components_b", r.components_b},
              {"ds_lower", r.ds_lower},
              {"ds_upper", optional_int(r.ds_upper)},
              {"dsig_lower", r.dsig_lower},
              {"dsig_upper", optional_int(r.dsig_upper)},
              {"lifted_path_ok", r.lifted_path_ok},
              {"all_components_ok", r.all_components_ok}};
}

DistortionRecord record_from_json(const Json& j) {
  DistortionRecord r;
  r.id = j.at("id").get<std::string>();
  r.genus = j.at("genus").get<int>();
  r.punctures = j.at("punctures").get<int>();
  r.degree = j.at("degree").get<int>();
  r.xi_total = j.at("xi_total").get<int>();
  r.a = j.at("a").get<std::string>();
  r.b = j.at("b").get<std::string>();
  r.alpha = j.at("alpha").get<std::string>();
  r.beta = j.at("beta").get<std::string>();
  r.components_a = j.at("components_a").get<int>();
  r.components_b = j.at("components_b").get<int>();
  r.ds_lower = j.at("ds_lower").get<int>();
  r.ds_upper = int_or_null(j.at("ds_upper"));
  r.dsig_lower = j.at("dsig_lower").get<int>();
  r.dsig_upper = int_or_null(j.at("dsig_upper"));
  r.lifted_path_ok = j.at("lifted_path_ok").get<bool>();
  r.all_components_ok = j.at("all_components_ok").get<bool>();
  return r;
}

std::string records_to_csv(const std::vector<DistortionRecord>& records) {
  std::ostringstream out;
  for (std::size_t i = 0; i < kColumns.size(); ++i) out << (i ? "," : "") << kColumns[i];
  out << '\n';
  for (const DistortionRecord& r : records) {
    const Json j = record_to_json(r);
    for (std::size_t i = 0; i < kColumns.size(); ++i) {
      const Json& v = j.at(kColumns[i]);
      const std::string text = v.is_string() ? v.get<std::string>() : (v.is_null() ? std::string() : v.dump());
      out << (i ? "," : "") << csv_field(text);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<DistortionRecord> records_from_csv(const std::string& csv) {
  const auto rows = parse_csv(csv);
  if (rows.empty() || rows.front() != kColumns) throw std::runtime_error("records CSV: unexpected header");
  std::vector<DistortionRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.size() != kColumns.size()) throw std::runtime_error("records CSV: row " + std::to_string(i) + " has wrong width");
    Json j = Json::object();
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
      const std::string& name = kColumns[c];
      const std::string& text = row[c];
      const bool is_text = name == "id" || name == "a" || name == "b" || name == "alpha" || name == "beta";
      if (is_text) {
        j[name] = text;
      } else if (text.empty()) {
        j[name] = nullptr;
      } else {
        j[name] = Json::parse(text);
      }
    }
    out.push_back(record_from_json(j));
  }
  return out;
}

Json to_json(const DistortionReport& r) {
  Json groups = Json::array();
  for (const DistortionGroup& g : r.groups) {
    groups.push_back(Json{{"xi_total", g.xi_total},
                          {"degree", g.degree},
                          {"records", g.records},
                          {"exact_records", g.exact_records},
                          {"lemma_checked", g.lemma_checked},
                          {"lemma_passed", g.lemma_passed},
                          {"violations", g.violations},
                          {"max_ratio", g.max_ratio},
                          {"k_hat", g.k_hat()},
                          {"k_hat_num", g.k_num},
                          {"k_hat_den", g.k_den}});
  }
  Json records = Json::array();
  for (const DistortionRecord& rec : r.records) records.push_back(record_to_json(rec));
  return Json{{"mode", r.mode},
              {"config", to_json(r.config)},
              {"summary",
               {{"records", r.records.size()},
                {"skipped", r.skipped},
                {"violations", r.violations},
                {"lemma_failures", r.lemma_failures},
                {"ok", r.ok()}}},
              {"groups", std::move(groups)},
              {"records", std::move(records)}};
}

void emit(const DistortionReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    const std::string path = (std::filesystem::path(dir) / name).string();
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + path);
  };
  write("report.json", to_json(r).dump(2) + "\n");
  write("records.csv", records_to_csv(r.records));
}

}  // namespace coverlift
