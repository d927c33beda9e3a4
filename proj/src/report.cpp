#include "capitulation/report.hpp"

#include <sstream>

#include "capitulation/errors.hpp"
#include "capitulation/structure.hpp"
#include "capitulation/transfer.hpp"

namespace capitulation::report {

using nlohmann::json;

namespace {

std::string element_text(const FiniteGroup& G, Element x, const std::vector<std::string>& names) {
  return x == 0 ? "1" : render_word(G.label(x), names);
}

json factors(const AbelianType& t) { return json(t.factors); }

template <class F>
json optional_field(F&& f) {
  try {
    return f();
  } catch (const Error&) {
    return nullptr;
  }
}

}  // namespace

Analysis analyze(const Presentation& pres, std::size_t max_cosets) {
  const FiniteGroup G = enumerate(pres, max_cosets);
  const auto& names = pres.generators;
  json doc;
  doc["input"] = pres.tag ? describe(*pres.tag) : render(pres);
  doc["presentation"] = render(pres);
  doc["order"] = G.order();
  const AbelianType ab = abelianization_type(G);
  doc["abelianization"] = factors(ab);
  std::vector<std::size_t> series;
  for (const auto& s : lower_central_series(G)) series.push_back(s.order());
  doc["lower_central_series"] = series;
  doc["rank"] = optional_field([&]() -> json { return rank(G); });
  doc["abelian"] = is_abelian(G);
  doc["metabelian"] = is_metabelian(G);
  doc["metacyclic"] = optional_field([&]() -> json { return is_metacyclic_bruteforce(G); });
  doc["modular"] = is_modular(G);
  doc["class"] = to_string(classify(G));
  doc["assumptions"] = json::array(
      {"G is read as Gal(k_2^(2)/k); transfer kernels stand for capitulation kernels"});
  doc["subgroups"] = json::array();
  doc["kernels"] = json::array();
  doc["class_numbers"] = json::array();
  doc["triple"] = nullptr;
  doc["class_generators"] = nullptr;

  Analysis out{doc, false};
  if (!is_two_group(G) || !(ab == AbelianType{{2, 4}})) {
    out.doc["assumptions"].push_back("G/G' is not of type (2,4): capitulation data not computed");
    return out;
  }
  out.hypothesis_met = true;
  const CapitulationReport R = capitulation_report(G);
  const auto& L = R.layout;
  std::vector<Element> rep(L.abelianization.group.order(), kNone);
  for (Element x = G.order(); x-- > 0;) rep[L.abelianization.projection[x]] = x;
  out.doc["class_generators"] = {
      {"c", {{"coset", L.c}, {"representative", element_text(G, rep[L.c], names)}}},
      {"d", {{"coset", L.d}, {"representative", element_text(G, rep[L.d], names)}}}};

  auto emit = [&](const SubgroupCapitulation& s) {
    json gens = json::array();
    for (Element x : s.subgroup.generators()) gens.push_back(element_text(G, x, names));
    out.doc["subgroups"].push_back({{"label", s.label},
                                    {"index", s.subgroup.index()},
                                    {"order", s.subgroup.order()},
                                    {"generators", gens},
                                    {"derived_order", s.derived.order()}});
    json k{{"subgroup", s.label},
           {"set", kernel_string(s.kernel_monomials)},
           {"monomials", s.kernel_monomials},
           {"cosets", s.kernel},
           {"size", s.kernel.size()}};
    k["taussky"] = s.letter ? json(*s.letter == TausskyLetter::A ? "A" : "B") : json(nullptr);
    out.doc["kernels"].push_back(k);
    out.doc["class_numbers"].push_back({{"subgroup", s.label},
                                        {"h", s.class_number},
                                        {"type", s.class_group.to_string()},
                                        {"factors", factors(s.class_group)}});
  };
  for (const auto& s : R.quadratic) emit(s);
  for (const auto& s : R.quartic) emit(s);
  out.doc["triple"] = R.triple_string();
  return out;
}

std::string analysis_text(const json& doc) {
  std::ostringstream os;
  auto type = [](const json& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i].get<std::uint64_t>());
    return s + ")";
  };
  os << "group: " << doc["input"].get<std::string>() << "\n";
  os << "order: " << doc["order"] << "\n";
  os << "class: " << doc["class"].get<std::string>() << "\n";
  os << "abelianization: " << type(doc["abelianization"]) << "\n";
  os << "lower central series:";
  for (const auto& x : doc["lower_central_series"]) os << " " << x;
  os << "\n";
  os << "rank: " << (doc["rank"].is_null() ? "n/a" : doc["rank"].dump()) << "\n";
  for (const char* k : {"abelian", "metabelian", "metacyclic", "modular"})
    os << k << ": " << (doc[k].is_null() ? "n/a" : doc[k].get<bool>() ? "yes" : "no") << "\n";
  if (!doc["class_generators"].is_null()) {
    os << "c = " << doc["class_generators"]["c"]["representative"].get<std::string>()
       << "G', d = " << doc["class_generators"]["d"]["representative"].get<std::string>() << "G'\n";
    for (std::size_t i = 0; i < doc["subgroups"].size(); ++i) {
      const auto& s = doc["subgroups"][i];
      const auto& k = doc["kernels"][i];
      const auto& h = doc["class_numbers"][i];
      std::string gens;
      for (const auto& g : s["generators"]) gens += (gens.empty() ? "" : ", ") + g.get<std::string>();
      os << s["label"].get<std::string>() << ": <" << gens << ">, index " << s["index"]
         << ", h = " << h["h"] << " " << h["type"].get<std::string>() << ", ker = "
         << k["set"].get<std::string>();
      if (!k["taussky"].is_null()) os << " " << k["taussky"].get<std::string>();
      os << "\n";
    }
    os << "triple: (" << doc["triple"].get<std::string>() << ")\n";
  }
  for (const auto& a : doc["assumptions"]) os << "assumption: " << a.get<std::string>() << "\n";
  return os.str();
}

json prediction_json(const arith::FieldPrediction& p, const std::string& mode,
                     const std::vector<std::uint64_t>& input) {
  json doc{{"mode", mode},
           {"input", input},
           {"consistency", arith::to_string(p.consistency)},
           {"assumptions", p.assumptions},
           {"notes", p.notes}};
  doc["predicted_class"] = p.predicted_class ? json(to_string(*p.predicted_class)) : json(nullptr);
  doc["presentation"] = p.presentation_text ? json(*p.presentation_text) : json(nullptr);
  doc["rank_l"] = p.rank_l ? json(*p.rank_l) : json(nullptr);
  doc["distinguished_index"] = p.distinguished ? json(*p.distinguished) : json(nullptr);
  doc["order"] = nullptr;
  if (p.predicted_presentation) {
    try {
      doc["order"] = enumerate(*p.predicted_presentation).order();
    } catch (const CosetLimitExceeded&) {
    }
  }
  return doc;
}

std::string prediction_text(const json& doc) {
  std::ostringstream os;
  os << "mode: " << doc["mode"].get<std::string>() << "\ninput:";
  for (const auto& x : doc["input"]) os << " " << x;
  os << "\n" << doc["consistency"].get<std::string>() << "\n";
  if (!doc["predicted_class"].is_null())
    os << "predicted class: " << doc["predicted_class"].get<std::string>() << "\n";
  if (!doc["presentation"].is_null()) os << "presentation: " << doc["presentation"].get<std::string>() << "\n";
  if (!doc["order"].is_null()) os << "order: " << doc["order"] << "\n";
  if (!doc["distinguished_index"].is_null()) os << "distinguished index: " << doc["distinguished_index"] << "\n";
  if (!doc["rank_l"].is_null()) os << "rank l: " << doc["rank_l"] << "\n";
  for (const auto& n : doc["notes"]) os << "note: " << n.get<std::string>() << "\n";
  for (const auto& a : doc["assumptions"]) os << "assumption: " << a.get<std::string>() << "\n";
  return os.str();
}

json outcomes_json(const std::vector<verify::Outcome>& outcomes) {
  json arr = json::array();
  for (const auto& o : outcomes) {
    json j{{"theorem", o.theorem}, {"instance", o.instance}, {"pass", o.pass}};
    if (!o.pass) j["detail"] = o.detail;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace capitulation::report
