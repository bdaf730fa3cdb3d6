#include "largesub/corpus.hpp"

#include <fstream>
#include <istream>

#include <json.hpp>

namespace largesub {

namespace {

using nlohmann::json;

Error parse_error(std::size_t line, const std::string& what) {
  return Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

FiniteGroup build(const json& j, std::size_t line, const std::string& name) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "table") {
    const auto n = j.at("order").get<std::size_t>();
    auto table = j.at("table").get<std::vector<Element>>();
    return FiniteGroup::from_flat_table(n, std::move(table), {}, name);
  }
  if (kind == "perm") {
    PermGenSet gens;
    gens.degree = j.at("degree").get<std::size_t>();
    gens.generators = j.at("generators").get<std::vector<std::vector<std::uint32_t>>>();
    return from_permutation_generators(gens, name);
  }
  throw parse_error(line, "unknown record kind '" + kind + "'");
}

}  // namespace

std::vector<CorpusRecord> parse_corpus(std::istream& in) {
  std::vector<CorpusRecord> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    CorpusRecord rec;
    rec.line = line;
    rec.name = "record@" + std::to_string(line);
    try {
      const json j = json::parse(text);
      if (!j.is_object()) throw parse_error(line, "record is not an object");
      rec.kind = j.value("kind", "");
      rec.name = j.value("name", rec.name);
      rec.group = build(j, line, rec.name);
    } catch (const Error& e) {
      rec.error = e;
    } catch (const json::exception& e) {
      rec.error = parse_error(line, e.what());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open corpus " + path.string());
  return parse_corpus(in);
}

std::vector<FiniteGroup> corpus_groups(const std::vector<CorpusRecord>& records) {
  std::vector<FiniteGroup> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (!r.ok())
      throw Error(ErrorKind::ParseError, "line " + std::to_string(r.line) + " (" +
                                             r.name + "): " + r.error->what());
    out.push_back(*r.group);
  }
  return out;
}

std::string to_corpus_record(const FiniteGroup& g) {
  json j;
  j["kind"] = "table";
  j["name"] = g.name();
  j["order"] = g.order();
  j["table"] = g.flat_table();
  return j.dump();
}

}  // namespace largesub
