#include "latrect/oeis.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

namespace latrect::oeis {

std::optional<Count> BFile::at(std::int64_t index) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), index,
                               [](const Term &t, std::int64_t i) { return t.index < i; });
    if (it == terms.end() || it->index != index)
        return std::nullopt;
    return it->value;
}

bool is_valid_id(std::string_view id) {
    return id.size() == 7 && id[0] == 'A' &&
           std::all_of(id.begin() + 1, id.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::int64_t parse_index(std::string_view text, std::size_t line) {
    bool negative = false;
    if (!text.empty() && text.front() == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    try {
        const Count magnitude = Count::parse(text);
        if (magnitude > Count(static_cast<std::uint64_t>(INT64_MAX)))
            throw BFileError("index out of range", line);
        const auto v = static_cast<std::int64_t>(magnitude.to_u64());
        return negative ? -v : v;
    } catch (const std::invalid_argument &e) {
        throw BFileError(std::string("bad index: ") + e.what(), line);
    }
}

}  // namespace

BFile parse_bfile(std::string_view text, std::string sequence_id) {
    BFile out;
    out.sequence_id = std::move(sequence_id);
    std::size_t line_no = 0;
    bool in_header = true;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        const auto line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '#') {
            if (in_header)
                out.header.emplace_back(trim(line.substr(1)));
            continue;
        }
        in_header = false;

        const auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos)
            throw BFileError("expected '<index> <value>'", line_no);
        const auto index_text = line.substr(0, sep);
        const auto value_text = trim(line.substr(sep));
        if (value_text.find_first_of(" \t") != std::string_view::npos)
            throw BFileError("trailing data after value", line_no);

        Term term;
        term.index = parse_index(index_text, line_no);
        if (!value_text.empty() && value_text.front() == '-')
            throw BFileError("negative values are not supported", line_no);
        try {
            term.value = Count::parse(value_text);
        } catch (const std::invalid_argument &e) {
            throw BFileError(std::string("bad value: ") + e.what(), line_no);
        } catch (const OverflowError &) {
            throw BFileError("value exceeds 128 bits", line_no);
        }
        if (!out.terms.empty() && term.index <= out.terms.back().index)
            throw BFileError("indices must be strictly increasing", line_no);
        out.terms.push_back(term);
    }
    return out;
}

std::string format_bfile(const BFile &bfile) {
    std::string out;
    for (const auto &h : bfile.header)
        out += "# " + h + "\n";
    for (const auto &t : bfile.terms)
        out += std::to_string(t.index) + " " + t.value.to_string() + "\n";
    return out;
}

std::string bfile_url(std::string_view sequence_id) {
    if (!is_valid_id(sequence_id))
        throw std::invalid_argument("malformed OEIS id '" + std::string(sequence_id) + "'");
    return "https://oeis.org/" + std::string(sequence_id) + "/b" + std::string(sequence_id.substr(1)) + ".txt";
}

std::optional<formulas::SequenceId> paired_sequence(std::string_view sequence_id) {
    for (auto id : formulas::kAllSequences)
        if (formulas::oeis_id(id) == sequence_id)
            return id;
    return std::nullopt;
}

std::string_view to_string(Source s) {
    switch (s) {
    case Source::Network: return "network";
    case Source::Cache: return "cache";
    case Source::Fixture: return "fixture";
    }
    return "?";
}

std::string_view to_string(SourcePolicy p) {
    switch (p) {
    case SourcePolicy::NetworkThenCache: return "network-then-cache";
    case SourcePolicy::CacheOnly: return "cache-only";
    case SourcePolicy::FixtureOnly: return "fixture-only";
    }
    return "?";
}

Client::Client(std::filesystem::path cache_dir, std::filesystem::path fixture_dir,
               std::shared_ptr<Transport> transport)
    : cache_dir_(std::move(cache_dir)), fixture_dir_(std::move(fixture_dir)), transport_(std::move(transport)) {}

std::optional<BFile> Client::read_file(const std::filesystem::path &dir, std::string_view id) const {
    const auto path = dir / (std::string(id) + ".bfile");
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_bfile(buf.str(), std::string(id));
    } catch (const BFileError &e) {
        throw FetchError(path.string() + ": " + e.what());
    }
}

void Client::write_cache(const BFile &bfile) const {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir_, ec);
    if (ec)
        throw FetchError("cannot create cache directory " + cache_dir_.string() + ": " + ec.message());
    // Write-then-rename so concurrent readers never see a partial file.
    const auto final_path = cache_dir_ / (bfile.sequence_id + ".bfile");
    auto tmp_path = final_path;
    tmp_path += ".tmp";
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        out << format_bfile(bfile);
        if (!out)
            throw FetchError("cannot write " + tmp_path.string());
    }
    std::filesystem::rename(tmp_path, final_path, ec);
    if (ec)
        throw FetchError("cannot move " + tmp_path.string() + " into place: " + ec.message());
}

Fetched Client::fetch(std::string_view sequence_id, SourcePolicy policy) const {
    if (!is_valid_id(sequence_id))
        throw std::invalid_argument("malformed OEIS id '" + std::string(sequence_id) + "'");
    if (!paired_sequence(sequence_id))
        throw std::invalid_argument("unknown sequence " + std::string(sequence_id) +
                                    "; expected one of A004320, A002417, A330805, A213840");

    if (policy == SourcePolicy::FixtureOnly) {
        if (auto b = read_file(fixture_dir_, sequence_id))
            return {std::move(*b), Source::Fixture};
        throw FetchError("no fixture for " + std::string(sequence_id) + " in " + fixture_dir_.string());
    }

    std::string network_error;
    if (policy == SourcePolicy::NetworkThenCache) {
        if (transport_) {
            try {
                auto b = parse_bfile(transport_->get(bfile_url(sequence_id)), std::string(sequence_id));
                if (b.terms.empty())
                    throw FetchError("empty b-file");
                b.header = {std::string(sequence_id) + " b-file from " + bfile_url(sequence_id)};
                write_cache(b);
                return {std::move(b), Source::Network};
            } catch (const FetchError &e) {
                network_error = e.what();
            } catch (const BFileError &e) {
                network_error = std::string("unparseable response: ") + e.what();
            }
        } else {
            network_error = "no transport configured";
        }
    }

    if (auto b = read_file(cache_dir_, sequence_id))
        return {std::move(*b), Source::Cache};
    std::string message = "cache miss for " + std::string(sequence_id) + " in " + cache_dir_.string();
    if (!network_error.empty())
        message += " (network: " + network_error + ")";
    throw FetchError(message);
}

SeqCheckReport check(const BFile &bfile, formulas::SequenceId sequence, std::int64_t n_max, Source source) {
    const auto paired = paired_sequence(bfile.sequence_id);
    if (!paired || *paired != sequence)
        throw std::invalid_argument("pairing " + bfile.sequence_id + " with " +
                                    std::string(formulas::to_string(sequence)) + " is not one of the four checked");
    if (n_max < 1)
        throw std::invalid_argument("n_max must be >= 1");

    SeqCheckReport report;
    report.sequence_id = bfile.sequence_id;
    report.sequence = sequence;
    report.bfile_offset = bfile.terms.empty() ? 0 : bfile.terms.front().index;
    report.first_n = 1;
    report.last_n = n_max;
    report.source = source;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        const auto expected = bfile.at(n);
        if (!expected)
            throw std::runtime_error(bfile.sequence_id + " has no term with index " + std::to_string(n) +
                                     " (needed " + std::to_string(n_max) + " terms)");
        const Count got = formulas::evaluate(sequence, n);
        if (got == *expected)
            ++report.matches;
        else if (!report.first_mismatch)
            report.first_mismatch = Mismatch{n, *expected, got};
    }
    return report;
}

SeqCheckReport check(const Client &client, std::string_view sequence_id, formulas::SequenceId sequence,
                     std::int64_t n_max, SourcePolicy policy) {
    const auto paired = paired_sequence(sequence_id);
    if (!paired || *paired != sequence)
        throw std::invalid_argument("pairing " + std::string(sequence_id) + " with " +
                                    std::string(formulas::to_string(sequence)) + " is not one of the four checked");
    auto fetched = client.fetch(sequence_id, policy);
    return check(fetched.bfile, sequence, n_max, fetched.source);
}

}  // namespace latrect::oeis
