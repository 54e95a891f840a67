#ifndef FIBREP_SEQUENCE_RECORD_HPP
#define FIBREP_SEQUENCE_RECORD_HPP

// Emission and parsing of computed sequences.
//
// A record carries the sequence name, the integer parameters that
// produced it (always the range bounds "from" and "to", plus "n" when
// the sequence is tied to a target), and the terms themselves.  Three
// output shapes are supported:
//
//   csv    "# <name> <key>=<value>..." carrier line, an "index,value"
//          header, then one row per term indexed from params["from"].
//   json   object {"name", "params", "terms"}, terms as decimal
//          strings so arbitrary-precision values survive.
//   bfile  "index value" per line, indices 1-based positions in the
//          list regardless of the parameter range.
//
// csv and json parse back to the exact record; bfile is emit-only.

#include "fibrep/fib.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fibrep {

struct SequenceRecord {
    std::string name;
    std::map<std::string, long long> params;
    std::vector<BigInt> terms;

    // First emitted index, params.at("from").  Throws std::out_of_range
    // when the range parameters are missing.
    long long first_index() const;

    bool operator==(const SequenceRecord&) const = default;
};

enum class SequenceFormat { csv, json, bfile };

// "csv" / "json" / "bfile"; anything else throws std::invalid_argument.
SequenceFormat sequence_format_from_string(std::string_view text);

// All emitters require terms.size() == to - from + 1 and throw
// std::invalid_argument when the record disagrees with its own range.
std::string to_csv(const SequenceRecord& record);
std::string to_json(const SequenceRecord& record);
std::string to_bfile(const SequenceRecord& record);
std::string emit(const SequenceRecord& record, SequenceFormat format);

// Exact inverses of to_csv / to_json.  Malformed input (bad carrier
// line, wrong header, non-contiguous indices, trailing garbage) throws
// std::invalid_argument naming the offending line.
SequenceRecord parse_csv(std::string_view text);
SequenceRecord parse_json(std::string_view text);

}  // namespace fibrep

#endif
