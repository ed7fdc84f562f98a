#include "sgpq/json_io.hpp"

#include <cctype>
#include <charconv>

namespace sgpq {

nlohmann::json semigroup_json(const NumericalSemigroup& s) {
  return {{"min_gens", s.minimal_generators().elements()},
          {"frobenius", s.frobenius()},
          {"gaps", gaps(s)}};
}

nlohmann::json partitions_json(const std::vector<DPartition>& ps) {
  nlohmann::json out = nlohmann::json::array();
  for (const DPartition& p : ps) out.push_back(p.parts);
  return out;
}

nlohmann::json gamma_json(const GammaSet& g, const BoundReport& b) {
  nlohmann::json witnesses = nlohmann::json::object();
  for (const GammaWitness& w : g.witnesses)
    witnesses[std::to_string(w.value)] = {{"partition", w.partition.parts},
                                          {"generators", w.generators}};
  return {{"d", g.d},
          {"gamma", g.elements},
          {"witnesses", witnesses},
          {"nu_quotient", b.nu_quotient},
          {"bound_partitioned", b.bound_partitioned},
          {"bound_binomial", b.bound_binomial},
          {"sharp", {{"partitioned", b.sharp_partitioned}, {"binomial", b.sharp_binomial}}}};
}

nlohmann::json cover_json(std::int64_t rho, const NumericalSemigroup& cover,
                          bool quotient_check) {
  return {{"rho", rho},
          {"T_min_gens", cover.minimal_generators().elements()},
          {"frobenius_T", cover.frobenius()},
          {"quotient_check", quotient_check}};
}

GeneratorSet parse_generators_csv(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::size_t begin = pos, end = comma;
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, value);
    if (ec != std::errc{} || ptr != text.data() + end)
      fail(errc::usage, "expected a comma-separated list of integers, got \"" + text + "\"");
    values.push_back(value);
    pos = comma + 1;
  }
  return GeneratorSet(std::move(values));
}

}  // namespace sgpq
