#pragma once

// Group files and report serialization (text, JSON, CSV). JSON output has
// sorted keys and carries every integer as a decimal string.

#include "nilmult/bounds.hpp"
#include "nilmult/groups.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace nilmult {

/// A group file that cannot be read or does not match the schema.
class GroupFileError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

struct GroupInput {
  std::string name;
  std::optional<AbelianGroup> abelian;  // set for "abelian" files; the table is built on demand
  FiniteGroup group(const Caps& caps = Caps{}) const { return table_ ? *table_ : groups::abelian(*abelian, caps.closure); }

  static GroupInput from_table(std::string name, FiniteGroup g) {
    GroupInput in;
    in.name = std::move(name);
    in.table_ = std::move(g);
    return in;
  }
  static GroupInput from_abelian(std::string name, AbelianGroup a) {
    GroupInput in;
    in.name = std::move(name);
    in.abelian = std::move(a);
    return in;
  }

 private:
  std::optional<FiniteGroup> table_;
};

namespace detail {

inline std::vector<std::uint32_t> json_uint_list(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw GroupFileError(std::string("\"") + what + "\" must be a list");
  std::vector<std::uint32_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() > 0xffffffffLL)
      throw GroupFileError(std::string("\"") + what + "\" must hold non-negative integers");
    out.push_back(x.get<std::uint32_t>());
  }
  return out;
}

}  // namespace detail

/// Parses {"type": "table"|"perm"|"abelian", ...}.
inline GroupInput parse_group_json(const std::string& text, const std::string& name = "file", const Caps& caps = Caps{}) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw GroupFileError(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw GroupFileError("group file needs a string field \"type\"");
  const auto type = j["type"].get<std::string>();
  try {
    if (type == "abelian") {
      if (!j.contains("invariants")) throw GroupFileError("abelian group file needs \"invariants\"");
      std::vector<std::uint64_t> inv;
      for (auto x : detail::json_uint_list(j["invariants"], "invariants")) {
        if (x < 2) throw GroupFileError("abelian invariants must be integers >= 2");
        inv.push_back(x);
      }
      return GroupInput::from_abelian(name, AbelianGroup::from_cyclic_orders(inv));
    }
    if (type == "table") {
      if (!j.contains("labels") || !j.contains("table")) throw GroupFileError("table group file needs \"labels\" and \"table\"");
      if (!j["labels"].is_array()) throw GroupFileError("\"labels\" must be a list of strings");
      std::vector<std::string> labels;
      for (const auto& l : j["labels"]) {
        if (!l.is_string()) throw GroupFileError("\"labels\" must be a list of strings");
        labels.push_back(l.get<std::string>());
      }
      if (!j["table"].is_array()) throw GroupFileError("\"table\" must be a list of rows");
      std::vector<std::vector<Element>> rows;
      for (const auto& row : j["table"]) rows.push_back(detail::json_uint_list(row, "table"));
      return GroupInput::from_table(name, FiniteGroup::from_table(std::move(labels), rows));
    }
    if (type == "perm") {
      if (!j.contains("degree") || !j.contains("generators"))
        throw GroupFileError("perm group file needs \"degree\" and \"generators\"");
      if (!j["degree"].is_number_integer() || j["degree"].get<std::int64_t>() < 1)
        throw GroupFileError("\"degree\" must be a positive integer");
      if (!j["generators"].is_array()) throw GroupFileError("\"generators\" must be a list of image lists");
      std::vector<std::vector<std::uint32_t>> gens;
      for (const auto& g : j["generators"]) gens.push_back(detail::json_uint_list(g, "generators"));
      return GroupInput::from_table(name, from_permutations(j["degree"].get<unsigned>(), gens, caps.closure));
    }
  } catch (const GroupFileError&) {
    throw;
  } catch (const ResourceLimit&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw GroupFileError(e.what());
  }
  throw GroupFileError("unknown group type \"" + type + "\"");
}

/// `spec` is a path to a group file or a built-in name.
inline GroupInput resolve_group(const std::string& spec, const Caps& caps = Caps{}) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    if (!in) throw GroupFileError("cannot read " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group_json(ss.str(), spec, caps);
  }
  if (auto g = groups::by_name(spec)) return GroupInput::from_table(spec, std::move(*g));
  throw InvalidArgument("'" + spec + "' is neither a group file nor a built-in group name");
}

// ---------------------------------------------------------------- reports

inline nlohmann::json to_json(const BoundValue& v) {
  nlohmann::json j;
  if (const auto* p = std::get_if<PValue>(&v)) {
    j["kind"] = "pvalue";
    j["value"] = p->value().str();
    nlohmann::json f = nlohmann::json::object();
    for (const auto& [prime, e] : p->factors()) f[std::to_string(prime)] = e.str();
    j["factors"] = f;
  } else {
    j["kind"] = "integer";
    j["value"] = std::get<BigInt>(v).str();
  }
  return j;
}

inline BoundValue bound_value_from_json(const nlohmann::json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "integer") return BigInt(j.at("value").get<std::string>());
  if (kind != "pvalue") throw InvalidArgument("unknown value kind " + kind);
  PValue v;
  for (const auto& [prime, e] : j.at("factors").items())
    v = v * PValue::prime_power(std::stoull(prime), BigInt(e.get<std::string>()));
  return v;
}

inline nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["bound_id"] = r.id;
  j["quantity"] = to_string(r.quantity);
  j["lhs_label"] = r.lhs_label;
  j["rhs_label"] = r.rhs_label;
  j["lhs"] = r.lhs ? to_json(*r.lhs) : nlohmann::json(nullptr);
  j["rhs"] = r.rhs ? to_json(*r.rhs) : nlohmann::json(nullptr);
  j["relation"] = r.relation == Relation::divides ? "divides" : "le";
  j["applicable"] = r.applicable;
  j["reason"] = r.reason;
  j["note"] = r.note;
  j["verdict"] = to_string(r.verdict);
  if (r.verdict == Verdict::holds || r.verdict == Verdict::fails) j["holds"] = r.verdict == Verdict::holds;
  else j["holds"] = nullptr;
  return j;
}

inline BoundReport report_from_json(const nlohmann::json& j) {
  BoundReport r;
  r.id = j.at("bound_id").get<std::string>();
  const auto q = j.at("quantity").get<std::string>();
  r.quantity = q == "order" ? Quantity::order : q == "exponent" ? Quantity::exponent : Quantity::generators;
  r.lhs_label = j.at("lhs_label").get<std::string>();
  r.rhs_label = j.at("rhs_label").get<std::string>();
  if (!j.at("lhs").is_null()) r.lhs = bound_value_from_json(j["lhs"]);
  if (!j.at("rhs").is_null()) r.rhs = bound_value_from_json(j["rhs"]);
  r.relation = j.at("relation").get<std::string>() == "divides" ? Relation::divides : Relation::less_equal;
  r.applicable = j.at("applicable").get<bool>();
  r.reason = j.at("reason").get<std::string>();
  r.note = j.at("note").get<std::string>();
  const auto v = j.at("verdict").get<std::string>();
  for (auto cand : {Verdict::holds, Verdict::fails, Verdict::unverifiable, Verdict::not_applicable, Verdict::informational})
    if (v == to_string(cand)) r.verdict = cand;
  return r;
}

/// Header fields plus one entry per report.
inline nlohmann::json reports_to_json(const BoundContext& ctx, const std::string& group_name,
                                      const std::vector<BoundReport>& reports) {
  nlohmann::json j;
  j["group"] = group_name;
  j["order"] = std::to_string(ctx.group().order());
  j["class"] = std::to_string(ctx.c());
  if (const auto& m = ctx.multiplier()) {
    nlohmann::json mj;
    mj["value"] = m->value.to_string();
    nlohmann::json inv = nlohmann::json::array();
    for (auto n : m->value.invariants()) inv.push_back(std::to_string(n));
    mj["invariants"] = inv;
    mj["provenance"] = m->provenance;
    j["multiplier"] = mj;
  } else {
    j["multiplier"] = nullptr;
  }
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  j["reports"] = list;
  return j;
}

inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

namespace detail {

inline std::string holds_cell(const BoundReport& r) {
  switch (r.verdict) {
    case Verdict::holds: return "true";
    case Verdict::fails: return "false";
    default: return to_string(r.verdict);
  }
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace detail

/// Columns: bound_id,quantity,target,lhs,relation,rhs,applicable,reason,holds.
/// `target` is the left-hand label; lhs/rhs are plain decimal integers.
inline std::string reports_to_csv(const std::vector<BoundReport>& reports) {
  std::string out = "bound_id,quantity,target,lhs,relation,rhs,applicable,reason,holds\n";
  auto cell = [](const std::optional<BoundValue>& v) {
    if (!v) return std::string{};
    if (const auto* p = std::get_if<PValue>(&*v)) return p->value().str();
    return std::get<BigInt>(*v).str();
  };
  for (const auto& r : reports) {
    const std::vector<std::string> row{r.id,
                                       to_string(r.quantity),
                                       r.lhs_label,
                                       cell(r.lhs),
                                       r.relation == Relation::divides ? "divides" : "le",
                                       cell(r.rhs),
                                       r.applicable ? "true" : "false",
                                       r.reason,
                                       detail::holds_cell(r)};
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + detail::csv_field(row[i]);
    out += "\n";
  }
  return out;
}

inline std::string reports_to_text(const BoundContext& ctx, const std::string& group_name,
                                   const std::vector<BoundReport>& reports) {
  std::ostringstream os;
  os << "group " << group_name << ", order " << ctx.group().order() << ", c = " << ctx.c() << "\n";
  if (const auto& m = ctx.multiplier())
    os << "M^(" << ctx.c() << ")(G) = " << m->value.to_string() << " (provenance: " << m->provenance << ")\n";
  else
    os << "M^(" << ctx.c() << ")(G) unknown\n";
  for (const auto& r : reports) {
    os << r.id << " [" << to_string(r.quantity) << "] ";
    if (!r.applicable) {
      os << "not applicable (" << r.reason << ")\n";
      continue;
    }
    os << r.lhs_label << " = " << (r.lhs ? to_string(*r.lhs) : "unknown") << "  " << to_string(r.relation) << "  "
       << r.rhs_label << " = " << (r.rhs ? to_string(*r.rhs) : "unknown") << "  : " << to_string(r.verdict);
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "\n";
  }
  return os.str();
}

inline std::string comparison_to_text(const BoundComparison& cmp) {
  std::ostringstream os;
  os << "upper bounds on " << cmp.target << ", smallest first\n";
  for (const auto& row : cmp.rows) {
    os << (row.tightest ? "* " : "  ") << row.id << "  " << row.rhs.to_string();
    if (!row.strictly_below.empty()) {
      os << "  < ";
      for (std::size_t i = 0; i < row.strictly_below.size(); ++i) os << (i ? ", " : "") << row.strictly_below[i];
    }
    os << "\n";
  }
  if (cmp.rows.size() > 1 && cmp.all_tied()) os << "all bounds coincide\n";
  return os.str();
}

}  // namespace nilmult
