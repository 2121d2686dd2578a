#include "skeinlab/census.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skeinlab/errors.hpp"
#include "skeinlab/notation.hpp"

namespace skeinlab {

std::vector<CensusEntry> loadTable(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open census table: " + path);
  std::stringstream buf;
  buf << in.rdbuf();

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("census table is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_array()) throw ParseError("census table must be a JSON array");

  std::vector<CensusEntry> entries;
  entries.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& row = doc[i];
    auto fail = [&](const std::string& what) {
      throw ParseError("census entry " + std::to_string(i) +
                       (row.contains("name") && row["name"].is_string()
                            ? " (" + row["name"].get<std::string>() + ")"
                            : "") +
                       ": " + what);
    };
    if (!row.is_object()) fail("not an object");
    if (!row.contains("name") || !row["name"].is_string()) fail("missing string field 'name'");
    if (!row.contains("notation") || !row["notation"].is_string())
      fail("missing string field 'notation'");

    CensusEntry e;
    e.name = row["name"].get<std::string>();
    e.notation = row["notation"].get<std::string>();
    if (row.contains("jones")) {
      if (!row["jones"].is_string()) fail("field 'jones' must be a string");
      e.expectedJones = row["jones"].get<std::string>();
    }
    if (row.contains("unknot")) {
      if (!row["unknot"].is_boolean()) fail("field 'unknot' must be a boolean");
      e.unknot = row["unknot"].get<bool>();
    }
    try {
      (void)parseNotation(e.notation);
    } catch (const Error& err) {
      fail(std::string("notation does not parse: ") + err.what());
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace skeinlab
