#include "curvcones/report.hpp"

#include <sstream>

#include "curvcones/numfmt.hpp"
#include "curvcones/version.hpp"

namespace curvcones {

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_double(values[i]);
  }
  return out;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["tool"] = {{"name", std::string(kToolName)},
               {"version", std::string(kToolVersion)}};
  j["convention"] = std::string(kConventionStatement);
  j["input"] = input;
  j["geometry"] = std::string(to_string(geometry));
  j["k"] = k;
  j["alpha"] = alpha;
  j["tolerance"] = tolerance;
  if (has_step) j["step"] = step;
  nlohmann::ordered_json jf = nlohmann::ordered_json::object();
  for (const auto& [key, value] : flags) jf[key] = value;
  j["flags"] = std::move(jf);

  nlohmann::ordered_json jp = nlohmann::ordered_json::array();
  for (const PointReport& p : points) {
    nlohmann::ordered_json e;
    if (p.has_point) e["point"] = p.point;
    e["spectrum"] = p.spectrum;
    e["shifted"] = p.shifted;
    e["sigma1"] = p.sigma1;
    e["sigma2"] = p.sigma2;
    e["status"] = to_string(p.status);
    jp.push_back(std::move(e));
  }
  j["points"] = std::move(jp);

  nlohmann::ordered_json js = nlohmann::ordered_json::array();
  for (const SkippedPoint& s : skipped) {
    nlohmann::ordered_json e;
    e["point"] = s.point;
    e["reason"] = s.reason;
    js.push_back(std::move(e));
  }
  j["skipped"] = std::move(js);

  if (has_k_smallest_sum) j["k_smallest_sum"] = k_smallest_sum;
  if (has_verdict) j["verdict"] = verdict.to_json();
  return j;
}

std::string Report::to_markdown() const {
  std::ostringstream md;
  md << "# " << kToolName << " report\n\n";
  md << "- tool: " << kToolName << " " << kToolVersion << "\n";
  md << "- input: " << input << "\n";
  md << "- geometry: " << to_string(geometry) << "\n";
  md << "- k: " << k << "\n";
  md << "- alpha: " << format_double(alpha) << "\n";
  md << "- tolerance: " << format_double(tolerance) << "\n";
  if (has_step) md << "- step: " << format_double(step) << "\n";
  for (const auto& [key, value] : flags)
    md << "- flag " << key << ": " << value << "\n";
  md << "- convention: " << kConventionStatement << "\n";

  md << "\n## Points\n\n";
  if (points.empty()) {
    md << "(none)\n";
  } else {
    const bool with_coords =
        !points.empty() && points.front().has_point;
    md << "| # |";
    if (with_coords) md << " point |";
    md << " status | sigma1 | sigma2 | spectrum | shifted |\n";
    md << "|---|";
    if (with_coords) md << "---|";
    md << "---|---|---|---|---|\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
      const PointReport& p = points[i];
      md << "| " << i << " |";
      if (with_coords) md << " (" << join_numbers(p.point) << ") |";
      md << " " << to_string(p.status) << " | " << format_double(p.sigma1)
         << " | " << format_double(p.sigma2) << " | "
         << join_numbers(p.spectrum) << " | " << join_numbers(p.shifted)
         << " |\n";
    }
  }

  md << "\n## Skipped\n\n";
  if (skipped.empty()) {
    md << "(none)\n";
  } else {
    for (const SkippedPoint& s : skipped)
      md << "- (" << join_numbers(s.point) << "): " << s.reason << "\n";
  }

  if (has_k_smallest_sum)
    md << "\n## k-smallest sum\n\n- " << format_double(k_smallest_sum)
       << "\n";

  if (has_verdict) {
    md << "\n## Verdict\n\n";
    md << "- conclusion: " << to_string(verdict.conclusion) << "\n";
    md << "- theorem: " << verdict.theorem << "\n";
    md << "- k: " << verdict.k << "\n";
    md << "- points checked: " << verdict.points_checked << "\n";
    if (!verdict.betti_vanishing.empty()) {
      md << "- vanishing Betti indices:";
      for (std::size_t p : verdict.betti_vanishing) md << " " << p;
      md << "\n";
    }
    md << "- caveats:\n";
    for (const std::string& c : verdict.caveats) md << "  - " << c << "\n";
  }
  return md.str();
}

}  // namespace curvcones
