#include <sstream>

#include "hopflift/catalog.hpp"
#include "hopflift/nichols.hpp"

namespace hopflift::catalog {

namespace {

// Summands in the order used for generator names: two-dimensional ones first,
// then the one-dimensional ones with their multiplicities.
std::vector<std::string> ordered_summands(int index, const std::vector<int>& n) {
  const OmegaInfo& info = omega_info(index);
  std::vector<int> mult = n;
  if (mult.empty()) mult.assign(info.multiplied.size(), 1);
  if (mult.size() != info.multiplied.size())
    throw CatalogError("Omega_" + std::to_string(index) + " takes " + std::to_string(info.multiplied.size()) +
                       " multiplicities");
  std::vector<std::string> out = info.fixed;
  int total = 0;
  for (std::size_t i = 0; i < info.multiplied.size(); ++i) {
    if (mult[i] < 0) throw CatalogError("multiplicities must be non-negative");
    total += mult[i];
    for (int r = 0; r < mult[i]; ++r) out.push_back(info.multiplied[i]);
  }
  if (index == 1 && total < 1) throw CatalogError("Omega_1 requires at least one summand (sum of n_j >= 1)");
  return out;
}

}  // namespace

std::vector<std::string> omega_generator_names(int index, const std::vector<int>& n) {
  std::vector<std::string> out;
  std::map<char, int> running;
  int pairs = 0;
  for (const auto& s : ordered_summands(index, n)) {
    if (s[0] == 'M') {
      const std::string x = pairs++ == 0 ? "p" : "q";
      out.push_back(x + "1");
      out.push_back(x + "2");
    } else {
      const char cls = static_cast<char>('A' + (std::stoi(s.substr(1)) - 1));
      out.push_back(std::string(1, cls) + std::to_string(++running[cls]));
    }
  }
  // one-dimensional classes are listed class by class
  std::stable_sort(out.begin() + 2 * pairs, out.end(),
                   [](const std::string& l, const std::string& r) { return l[0] < r[0]; });
  return out;
}

namespace {

YDModule ordered_omega(int index, const std::vector<int>& n) {
  auto names = ordered_summands(index, n);
  std::stable_sort(names.begin(), names.end(), [](const std::string& l, const std::string& r) {
    const bool lm = l[0] == 'M', rm = r[0] == 'M';
    if (lm != rm) return lm;
    return !lm && std::stoi(l.substr(1)) < std::stoi(r.substr(1));
  });
  std::vector<YDModule> parts;
  for (const auto& s : names) parts.push_back(simple(s));
  return direct_sum(parts);
}

}  // namespace

Presentation nichols_quadratic(int index, const std::vector<int>& n) {
  return tensor_algebra_quotient(omega_generator_names(index, n), quadratic_relations(ordered_omega(index, n)));
}

Presentation bosonization(int index, const std::vector<int>& n) {
  return smash_product(nichols_quadratic(index, n), h_presentation(), *H(), ordered_omega(index, n));
}

std::vector<DeformationProbe> deformation_probes(int index, const std::vector<int>& n) {
  const Presentation b = bosonization(index, n);
  const std::size_t m = b.num_module_letters();
  // group-like g_x with Delta(x) = x (x) 1 + g_x (x) x
  std::map<char, Word> grouplike;
  for (const auto& [x, t] : b.coproducts()) {
    if (static_cast<std::size_t>(static_cast<unsigned char>(x)) >= m) continue;
    for (const auto& [w, c] : t.terms)
      if (w[1] == Word(1, x) && c == Scalar(1)) grouplike[x] = w[0];
  }
  std::istringstream lines(b.dsl());
  std::vector<std::string> text;
  for (std::string line; std::getline(lines, line);) text.push_back(line);

  std::vector<DeformationProbe> out;
  std::size_t rule_line = 0;
  for (const Rule& r : b.rules()) {
    while (rule_line < text.size() && text[rule_line].rfind("rel: ", 0) != 0) ++rule_line;
    const std::size_t at = rule_line++;
    const Word& lhs = r.lhs;
    if (lhs.size() != 2 || static_cast<unsigned char>(lhs[0]) >= m || static_cast<unsigned char>(lhs[1]) >= m)
      continue;
    DeformationProbe probe;
    probe.relation = b.str(Poly::word(lhs)) + " = " + b.str(r.rhs);
    auto gx = grouplike.find(lhs[0]), gy = grouplike.find(lhs[1]);
    if (gx == grouplike.end() || gy == grouplike.end()) {
      probe.reason = "no group-like coefficient";
      out.push_back(probe);
      continue;
    }
    const Poly g = b.normal_form(Poly::word(gx->second + gy->second));
    probe.constant = g == Poly(Scalar(1)) ? "1" : "(1 - " + b.str(g) + ")";
    std::vector<std::string> edited = text;
    edited[at] += " + " + probe.constant;
    std::string src;
    for (const auto& l : edited) src += l + "\n";
    try {
      const Presentation d = parse_presentation(src);
      const OverlapReport ov = confluence_check(d);
      if (!ov.confluent()) {
        probe.rejected = true;
        probe.reason = std::to_string(ov.failures()) + " unresolved overlaps";
      } else {
        const CheckReport bi = check_bialgebra_on_presentation(d);
        probe.rejected = !bi.ok();
        probe.reason = bi.ok() ? "accepted" : bi.failures.front();
      }
    } catch (const PresentationError& e) {
      probe.rejected = true;
      probe.reason = e.what();
    }
    out.push_back(probe);
  }
  return out;
}

}  // namespace hopflift::catalog
