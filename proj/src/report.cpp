#include "grr/report.hpp"

#include <iomanip>
#include <sstream>

namespace grr {

namespace {

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string num(long double v) {
  std::ostringstream os;
  os << std::setprecision(17) << static_cast<double>(v);
  return os.str();
}

template <typename... T>
std::string row(const T&... cells) {
  std::string out;
  ((out += (out.empty() ? "" : ",") + cells), ...);
  return out;
}

}  // namespace

Json big_json(const BigInt& v) {
  if (v >= 0 && v <= (BigInt(1) << 53)) return v.convert_to<std::uint64_t>();
  return to_string(v);
}

Json to_json(const CensusRecord& r, bool with_elapsed) {
  Json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["mode"] = to_string(r.mode);
  j["method"] = r.method;
  j["total"] = big_json(r.total);
  j["counts"] = {{"drr_or_grr", r.counts.regular}, {"normal", r.counts.normal}, {"non_regular", r.counts.non_regular}};
  if (r.method == "exhaustive")
    j["proportion"] = {{"num", r.counts.regular}, {"den", big_json(r.total)}, {"value", r.estimate()}};
  else
    j["proportion"] = {{"estimate", r.estimate()}, {"half_width", r.half_width()}, {"confidence", 0.95}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  if (r.method == "sample") j["sample_offset"] = r.sample_offset;
  if (with_elapsed) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const SuiteRecord& r, const std::string& suite) {
  Json j;
  j["suite"] = suite;
  j["group"] = r.group;
  j["subgroup"] = r.subgroup;
  j["lemma"] = r.lemma;
  j["count"] = big_json(r.count);
  j["bound_num"] = r.bound_num ? Json(*r.bound_num) : Json(nullptr);
  j["bound_den_exp"] = r.bound_num ? Json(r.bound_den_exp) : Json(nullptr);
  j["exact"] = !r.advisory_exponent.has_value();
  if (r.advisory_exponent) j["advisory_exponent"] = *r.advisory_exponent;
  j["holds"] = r.holds;
  j["status"] = r.status;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json to_json(const BoundTable& b) {
  auto d = [](long double v) { return static_cast<double>(v); };
  Json j;
  j["r"] = d(b.r);
  j["c_r"] = d(b.c_r);
  j["log2_r"] = d(b.log2_r);
  j["decay"] = d(b.decay);
  j["grr_exponent"] = d(b.grr_exponent);
  j["unlabeled_exponent"] = d(b.unlabeled_exponent);
  j["normal_exponent"] = d(b.normal_exponent);
  j["aut_bound_exponent"] = d(b.aut_bound_exponent);
  j["b_r"] = d(b.b_r);
  j["grr_count_exponent"] = d(b.grr_count_exponent);
  j["vacuous"] = {{"grr", b.grr_vacuous}, {"unlabeled", b.unlabeled_vacuous}, {"normal", b.normal_vacuous}};
  j["exact"] = false;
  return j;
}

Json to_json(const OvergroupScenario& s) {
  Json orbits = Json::array();
  for (const auto& o : s.h_orbits)
    orbits.push_back({{"points", format_elements(o.points)},
                      {"preimage", format_elements(o.preimage)},
                      {"cells", static_cast<int>(o.cells.size())},
                      {"inverse_fixed", o.inverse_fixed}});
  Json j;
  j["group"] = s.group->name();
  j["label"] = s.label;
  j["overgroup_order"] = big_json(s.overgroup.order());
  j["generators"] = Json::array();
  for (const auto& g : s.overgroup.generators()) j["generators"].push_back(g.to_line());
  j["core"] = format_elements(s.core_mask);
  j["core_order"] = big_json(s.core.order());
  j["quotient_order"] = s.quotient.table.order();
  j["h_orbits"] = orbits;
  j["kappa"] = s.kappa;
  j["joint_orbits"] = s.joint_orbits;
  j["flags"] = {{"transitive", s.transitive},
                {"proper", s.proper},
                {"r_maximal", s.r_maximal ? Json(*s.r_maximal) : Json(nullptr)},
                {"quotient_grr_eligible", s.quotient_grr_eligible},
                {"group_grr_eligible", s.group_grr_eligible},
                {"degenerate", s.degenerate}};
  return j;
}

Json to_json(const UnlabeledCensus& u, const std::string& group) {
  return {{"group", group},
          {"labeled_total", u.labeled_total},
          {"labeled_grr", u.labeled_grr},
          {"iso_classes", u.iso_classes},
          {"grr_classes", u.grr_classes},
          {"group_automorphisms", u.group_automorphisms},
          {"ratio", u.ratio}};
}

std::string csv_header_census() {
  return "group,order,mode,method,total,drr_or_grr,normal,non_regular,proportion,half_width,seed,elapsed_ms";
}

std::string to_csv(const CensusRecord& r) {
  return row(quote(r.group), std::to_string(r.order), to_string(r.mode), r.method, to_string(r.total),
             std::to_string(r.counts.regular), std::to_string(r.counts.normal), std::to_string(r.counts.non_regular),
             num(r.estimate()), num(r.half_width()), r.seed ? std::to_string(*r.seed) : std::string(),
             num(r.elapsed_ms));
}

std::string csv_header_suite() { return "suite,group,subgroup,lemma,count,bound_num,bound_den_exp,holds,status"; }

std::string to_csv(const SuiteRecord& r, const std::string& suite) {
  return row(quote(suite), quote(r.group), quote(r.subgroup), quote(r.lemma), to_string(r.count),
             r.bound_num ? std::to_string(*r.bound_num) : std::string(),
             r.bound_num ? std::to_string(r.bound_den_exp) : std::string(), std::string(r.holds ? "true" : "false"),
             r.status);
}

std::string csv_header_bounds() {
  return "r,c_r,decay,grr_exponent,unlabeled_exponent,normal_exponent,aut_bound_exponent,b_r,grr_vacuous,"
         "unlabeled_vacuous,normal_vacuous";
}

std::string to_csv(const BoundTable& b) {
  auto f = [](bool v) { return std::string(v ? "true" : "false"); };
  return row(num(b.r), num(b.c_r), num(b.decay), num(b.grr_exponent), num(b.unlabeled_exponent),
             num(b.normal_exponent), num(b.aut_bound_exponent), num(b.b_r), f(b.grr_vacuous), f(b.unlabeled_vacuous),
             f(b.normal_vacuous));
}

std::string csv_header_scenario() {
  return "group,label,overgroup_order,core_order,quotient_order,h_orbits,kappa,joint_orbits,r_maximal,"
         "quotient_grr_eligible,degenerate";
}

std::string to_csv(const OvergroupScenario& s) {
  auto f = [](bool v) { return std::string(v ? "true" : "false"); };
  return row(quote(s.group->name()), quote(s.label), to_string(s.overgroup.order()), to_string(s.core.order()),
             std::to_string(s.quotient.table.order()), std::to_string(s.h_orbits.size()), std::to_string(s.kappa),
             std::to_string(s.joint_orbits), s.r_maximal ? f(*s.r_maximal) : std::string(),
             f(s.quotient_grr_eligible), f(s.degenerate));
}

}  // namespace grr
