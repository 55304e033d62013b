#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latrect/count.hpp"
#include "latrect/formulas.hpp"

namespace latrect::oeis {

class BFileError : public std::runtime_error {
public:
    BFileError(const std::string &message, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Network or cache failure while obtaining a b-file.
class FetchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Term {
    std::int64_t index = 0;
    Count value;
    friend bool operator==(const Term &, const Term &) = default;
};

struct BFile {
    std::string sequence_id;        // "A" followed by six digits
    std::vector<Term> terms;        // strictly increasing indices
    std::vector<std::string> header;  // leading '#' comment lines, without the '#'

    std::optional<Count> at(std::int64_t index) const;
    friend bool operator==(const BFile &lhs, const BFile &rhs) {
        return lhs.sequence_id == rhs.sequence_id && lhs.terms == rhs.terms;
    }
};

bool is_valid_id(std::string_view id);

/// Lines are "<index> <value>"; blank lines and '#' comments are skipped.
/// Anything else, and non-increasing indices, throw BFileError.
BFile parse_bfile(std::string_view text, std::string sequence_id = {});
std::string format_bfile(const BFile &bfile);

/// "https://oeis.org/A004320/b004320.txt"
std::string bfile_url(std::string_view sequence_id);

/// The four sequences this project checks, in pairing order.
inline constexpr std::string_view kKnownIds[] = {"A004320", "A002417", "A330805", "A213840"};

/// The sequence a known A-number is paired with, if any.
std::optional<formulas::SequenceId> paired_sequence(std::string_view sequence_id);

class Transport {
public:
    virtual ~Transport() = default;
    /// Returns the response body; throws FetchError on any failure.
    virtual std::string get(const std::string &url) = 0;
};

/// HTTPS transport backed by cpp-httplib.
std::unique_ptr<Transport> make_https_transport();

enum class SourcePolicy { NetworkThenCache, CacheOnly, FixtureOnly };
enum class Source { Network, Cache, Fixture };

std::string_view to_string(Source s);
std::string_view to_string(SourcePolicy p);

struct Fetched {
    BFile bfile;
    Source source;
};

/// Cache layout: <cache_dir>/<id>.bfile; fixtures use the same layout.
class Client {
public:
    Client(std::filesystem::path cache_dir, std::filesystem::path fixture_dir,
           std::shared_ptr<Transport> transport = nullptr);

    Fetched fetch(std::string_view sequence_id, SourcePolicy policy) const;

    const std::filesystem::path &cache_dir() const { return cache_dir_; }
    const std::filesystem::path &fixture_dir() const { return fixture_dir_; }

private:
    std::optional<BFile> read_file(const std::filesystem::path &dir, std::string_view id) const;
    void write_cache(const BFile &bfile) const;

    std::filesystem::path cache_dir_;
    std::filesystem::path fixture_dir_;
    std::shared_ptr<Transport> transport_;
};

struct Mismatch {
    std::int64_t n = 0;
    Count expected;  // b-file value
    Count got;       // computed value
};

struct SeqCheckReport {
    std::string sequence_id;
    formulas::SequenceId sequence = formulas::SequenceId::S;
    std::int64_t bfile_offset = 0;  // first index present in the b-file
    std::int64_t first_n = 1;
    std::int64_t last_n = 0;
    std::int64_t matches = 0;
    std::optional<Mismatch> first_mismatch;
    Source source = Source::Fixture;

    std::int64_t range_length() const { return last_n - first_n + 1; }
    bool ok() const { return !first_mismatch && matches == range_length(); }
};

/// Compares evaluate(sequence, n) with the b-file term of index n for
/// n = 1..n_max. Terms are matched by the b-file's own indices, so an entry
/// with offset 0 simply has one extra leading term.
/// Throws std::invalid_argument for a pairing outside the known four and
/// std::runtime_error when the b-file lacks some index in 1..n_max.
SeqCheckReport check(const BFile &bfile, formulas::SequenceId sequence, std::int64_t n_max,
                     Source source = Source::Fixture);

SeqCheckReport check(const Client &client, std::string_view sequence_id, formulas::SequenceId sequence,
                     std::int64_t n_max, SourcePolicy policy);

}  // namespace latrect::oeis
