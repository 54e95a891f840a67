#include "fibrep/sequence_record.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace fibrep {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void bad_input(size_t line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

long long range_length(const SequenceRecord& record) {
    const auto from = record.params.find("from");
    const auto to = record.params.find("to");
    if (from == record.params.end() || to == record.params.end())
        throw std::invalid_argument("sequence record " + record.name +
                                    " lacks its from/to range parameters");
    return to->second - from->second + 1;
}

void check_shape(const SequenceRecord& record) {
    if (record.name.empty() ||
        record.name.find_first_of(" \t\n") != std::string::npos)
        throw std::invalid_argument(
            "sequence record name must be non-empty and free of whitespace");
    if (range_length(record) != static_cast<long long>(record.terms.size()))
        throw std::invalid_argument(
            "sequence record " + record.name + " holds " +
            std::to_string(record.terms.size()) + " terms but its range covers " +
            std::to_string(range_length(record)));
}

long long parse_ll(const std::string& text, size_t line, const char* what) {
    try {
        size_t used = 0;
        long long value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        bad_input(line, std::string("expected an integer ") + what + ", got \"" +
                            text + "\"");
    }
}

}  // namespace

long long SequenceRecord::first_index() const { return params.at("from"); }

SequenceFormat sequence_format_from_string(std::string_view text) {
    if (text == "csv") return SequenceFormat::csv;
    if (text == "json") return SequenceFormat::json;
    if (text == "bfile") return SequenceFormat::bfile;
    throw std::invalid_argument("unknown sequence format \"" +
                                std::string(text) +
                                "\"; expected csv, json or bfile");
}

std::string to_csv(const SequenceRecord& record) {
    check_shape(record);
    std::ostringstream out;
    out << "# " << record.name;
    for (const auto& [key, value] : record.params)
        out << ' ' << key << '=' << value;
    out << "\nindex,value\n";
    long long index = record.first_index();
    for (const auto& term : record.terms)
        out << index++ << ',' << term.get_str() << '\n';
    return out.str();
}

std::string to_json(const SequenceRecord& record) {
    check_shape(record);
    ordered_json doc;
    doc["name"] = record.name;
    doc["params"] = ordered_json::object();
    for (const auto& [key, value] : record.params) doc["params"][key] = value;
    doc["terms"] = ordered_json::array();
    for (const auto& term : record.terms) doc["terms"].push_back(term.get_str());
    return doc.dump(2) + "\n";
}

std::string to_bfile(const SequenceRecord& record) {
    check_shape(record);
    std::ostringstream out;
    long long position = 1;
    for (const auto& term : record.terms)
        out << position++ << ' ' << term.get_str() << '\n';
    return out.str();
}

std::string emit(const SequenceRecord& record, SequenceFormat format) {
    switch (format) {
        case SequenceFormat::csv: return to_csv(record);
        case SequenceFormat::json: return to_json(record);
        case SequenceFormat::bfile: return to_bfile(record);
    }
    throw std::invalid_argument("emit: bad format value");
}

SequenceRecord parse_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 1;

    if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
        bad_input(line_no, "expected the \"# <name> <key>=<value>...\" carrier line");
    SequenceRecord record;
    {
        std::istringstream fields(line.substr(2));
        if (!(fields >> record.name))
            bad_input(line_no, "carrier line lacks a sequence name");
        std::string token;
        while (fields >> token) {
            const size_t eq = token.find('=');
            if (eq == std::string::npos || eq == 0)
                bad_input(line_no, "malformed parameter \"" + token + "\"");
            record.params[token.substr(0, eq)] =
                parse_ll(token.substr(eq + 1), line_no, "parameter value");
        }
    }

    ++line_no;
    if (!std::getline(in, line) || line != "index,value")
        bad_input(line_no, "expected the \"index,value\" header");

    const auto from = record.params.find("from");
    if (from == record.params.end())
        bad_input(1, "carrier line lacks the \"from\" range parameter");
    long long expected_index = from->second;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) bad_input(line_no, "blank row");
        const size_t comma = line.find(',');
        if (comma == std::string::npos) bad_input(line_no, "row lacks a comma");
        const long long index =
            parse_ll(line.substr(0, comma), line_no, "row index");
        if (index != expected_index)
            bad_input(line_no, "row index " + std::to_string(index) +
                                   " breaks the sequence; expected " +
                                   std::to_string(expected_index));
        ++expected_index;
        try {
            record.terms.emplace_back(line.substr(comma + 1), 10);
        } catch (const std::exception&) {
            bad_input(line_no, "bad term \"" + line.substr(comma + 1) + "\"");
        }
    }
    check_shape(record);
    return record;
}

SequenceRecord parse_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw std::invalid_argument(std::string("bad json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("name") || !doc.contains("params") ||
        !doc.contains("terms"))
        throw std::invalid_argument(
            "json sequence must be an object with name, params and terms");
    SequenceRecord record;
    record.name = doc["name"].get<std::string>();
    for (const auto& [key, value] : doc["params"].items()) {
        if (!value.is_number_integer())
            throw std::invalid_argument("parameter " + key +
                                        " is not an integer");
        record.params[key] = value.get<long long>();
    }
    for (const auto& term : doc["terms"]) {
        try {
            if (term.is_string())
                record.terms.emplace_back(term.get<std::string>(), 10);
            else if (term.is_number_integer())
                record.terms.emplace_back(
                    std::to_string(term.get<long long>()), 10);
            else
                throw std::invalid_argument("term is neither string nor integer");
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad term in json sequence");
        }
    }
    check_shape(record);
    return record;
}

}  // namespace fibrep
