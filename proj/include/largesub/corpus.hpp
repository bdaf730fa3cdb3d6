#ifndef LARGESUB_CORPUS_HPP
#define LARGESUB_CORPUS_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "largesub/group.hpp"

namespace largesub {

// Corpus files hold one JSON object per line:
//
//   {"kind": "table", "name": "C2", "order": 2, "table": [0, 1, 1, 0]}
//   {"kind": "perm",  "name": "S3", "degree": 3,
//    "generators": [[1, 2, 0], [1, 0, 2]]}
//
// Tables are row-major. Permutations are 0-based one-line images. Blank
// lines and lines starting with '#' are ignored.

/// One record: either a group or the error that stopped it being built.
struct CorpusRecord {
  std::size_t line = 0;
  std::string name;
  std::string kind;
  std::optional<FiniteGroup> group;
  std::optional<Error> error;

  bool ok() const noexcept { return group.has_value(); }
};

/// Parses every record; per-record problems are captured, not thrown.
std::vector<CorpusRecord> parse_corpus(std::istream& in);
/// Throws ParseError if the file cannot be opened.
std::vector<CorpusRecord> load_corpus(const std::filesystem::path& path);

/// Every record's group, or a ParseError naming the first bad line.
std::vector<FiniteGroup> corpus_groups(const std::vector<CorpusRecord>& records);

/// A table record for g, on one line.
std::string to_corpus_record(const FiniteGroup& g);

}  // namespace largesub

#endif  // LARGESUB_CORPUS_HPP
