#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "latrect/formulas.hpp"
#include "latrect/oeis.hpp"

namespace {

namespace fs = std::filesystem;
using namespace latrect;
using namespace latrect::oeis;
using formulas::SequenceId;

const fs::path kFixtures = LATRECT_TEST_FIXTURE_DIR;

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        path_ = fs::temp_directory_path() /
                ("latrect-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    const fs::path &path() const { return path_; }

private:
    fs::path path_;
};

class ThrowingTransport : public Transport {
public:
    std::string get(const std::string &) override {
        ++calls;
        throw FetchError("offline");
    }
    int calls = 0;
};

class CannedTransport : public Transport {
public:
    explicit CannedTransport(std::string body) : body_(std::move(body)) {}
    std::string get(const std::string &url) override {
        urls.push_back(url);
        return body_;
    }
    std::vector<std::string> urls;

private:
    std::string body_;
};

TEST(BFile, Parse) {
    const auto b = parse_bfile("# comment\n1 3\n\n2 16\n3 50\n", "A004320");
    ASSERT_EQ(b.terms.size(), 3u);
    EXPECT_EQ(b.terms[1], (Term{2, Count(16)}));
    EXPECT_EQ(b.at(3), Count(50));
    EXPECT_FALSE(b.at(4));
    EXPECT_EQ(b.header, std::vector<std::string>{"comment"});
}

TEST(BFile, ParseErrorsCarryLineNumbers) {
    auto line_of = [](const char *text) -> std::size_t {
        try {
            parse_bfile(text);
        } catch (const BFileError &e) {
            return e.line();
        }
        ADD_FAILURE() << "no error for " << text;
        return 0;
    };
    EXPECT_EQ(line_of("1 1\n2 x\n"), 2u);
    EXPECT_EQ(line_of("1 1\n1 2\n"), 2u);
    EXPECT_EQ(line_of("#\n\n5\n"), 3u);
    EXPECT_EQ(line_of("1 2 3\n"), 1u);
    EXPECT_EQ(line_of("1 -2\n"), 1u);
}

TEST(BFile, LargeValuesAndCrlf) {
    const auto b = parse_bfile("1 123456789012345678901234567890\r\n");
    EXPECT_EQ(b.at(1)->to_string(), "123456789012345678901234567890");
}

TEST(BFile, Ids) {
    EXPECT_TRUE(is_valid_id("A004320"));
    EXPECT_FALSE(is_valid_id("A04320"));
    EXPECT_FALSE(is_valid_id("a004320"));
    EXPECT_FALSE(is_valid_id("A00432x"));
    EXPECT_EQ(bfile_url("A004320"), "https://oeis.org/A004320/b004320.txt");
    EXPECT_EQ(paired_sequence("A330805"), SequenceId::A);
    EXPECT_FALSE(paired_sequence("A000045"));
}

TEST(BFile, FixturesRoundTrip) {
    for (auto id : kKnownIds) {
        const auto text = slurp(kFixtures / (std::string(id) + ".bfile"));
        const auto b = parse_bfile(text, std::string(id));
        EXPECT_GE(b.terms.size(), 20u);
        EXPECT_EQ(parse_bfile(format_bfile(b), std::string(id)), b);
        EXPECT_EQ(format_bfile(parse_bfile(format_bfile(b))), format_bfile(b));
    }
}

TEST(Check, FixturesMatchFormulasForTwentyTerms) {
    const Client client("/nonexistent-cache", kFixtures);
    for (auto id : kKnownIds) {
        const auto report = check(client, id, *paired_sequence(id), 20, SourcePolicy::FixtureOnly);
        EXPECT_TRUE(report.ok()) << id;
        EXPECT_EQ(report.matches, 20);
        EXPECT_EQ(report.source, Source::Fixture);
    }
}

TEST(Check, OffsetZeroEntryIsAlignedByIndex) {
    const auto report = check(parse_bfile("0 0\n1 3\n2 16\n3 50\n", "A004320"), SequenceId::AHalf, 3);
    EXPECT_EQ(report.bfile_offset, 0);
    EXPECT_TRUE(report.ok());
}

TEST(Check, ReportsFirstMismatch) {
    const auto report = check(parse_bfile("1 9\n2 51\n3 167\n4 411\n", "A330805"), SequenceId::A, 4);
    EXPECT_FALSE(report.ok());
    ASSERT_TRUE(report.first_mismatch);
    EXPECT_EQ(report.first_mismatch->n, 3);
    EXPECT_EQ(report.first_mismatch->expected, Count(167));
    EXPECT_EQ(report.first_mismatch->got, Count(166));
    EXPECT_EQ(report.matches, 2);
}

TEST(Check, RejectsBadInput) {
    const auto b = parse_bfile("1 9\n2 51\n", "A330805");
    EXPECT_THROW(check(b, SequenceId::B, 2), std::invalid_argument);
    EXPECT_THROW(check(b, SequenceId::A, 0), std::invalid_argument);
    EXPECT_THROW(check(b, SequenceId::A, 3), std::runtime_error);
}

TEST(Client, FixtureOnlyNeverTouchesTheNetwork) {
    auto transport = std::make_shared<ThrowingTransport>();
    const Client client("/nonexistent-cache", kFixtures, transport);
    const auto got = client.fetch("A213840", SourcePolicy::FixtureOnly);
    EXPECT_EQ(got.source, Source::Fixture);
    EXPECT_EQ(transport->calls, 0);
}

TEST(Client, RejectsMalformedAndUnknownIds) {
    const Client client("/nonexistent-cache", kFixtures);
    EXPECT_THROW(client.fetch("A000000", SourcePolicy::FixtureOnly), std::invalid_argument);
    EXPECT_THROW(client.fetch("X1", SourcePolicy::FixtureOnly), std::invalid_argument);
}

TEST(Client, NetworkFailureFallsBackToCache) {
    TempDir cache;
    fs::create_directories(cache.path());
    fs::copy_file(kFixtures / "A002417.bfile", cache.path() / "A002417.bfile");
    auto transport = std::make_shared<ThrowingTransport>();
    const Client client(cache.path(), "/nonexistent-fixtures", transport);
    const auto got = client.fetch("A002417", SourcePolicy::NetworkThenCache);
    EXPECT_EQ(got.source, Source::Cache);
    EXPECT_EQ(transport->calls, 1);
    EXPECT_EQ(client.fetch("A002417", SourcePolicy::CacheOnly).source, Source::Cache);
    EXPECT_EQ(transport->calls, 1);
}

TEST(Client, CacheMissIsAFetchError) {
    TempDir cache;
    const Client client(cache.path(), "/nonexistent-fixtures", std::make_shared<ThrowingTransport>());
    EXPECT_THROW(client.fetch("A330805", SourcePolicy::CacheOnly), FetchError);
    EXPECT_THROW(client.fetch("A330805", SourcePolicy::NetworkThenCache), FetchError);
    EXPECT_THROW(client.fetch("A330805", SourcePolicy::FixtureOnly), FetchError);
}

TEST(Client, NetworkResultIsWrittenThrough) {
    TempDir cache;
    auto transport = std::make_shared<CannedTransport>("1 9\n2 51\n3 166\n");
    const Client client(cache.path(), "/nonexistent-fixtures", transport);
    const auto got = client.fetch("A330805", SourcePolicy::NetworkThenCache);
    EXPECT_EQ(got.source, Source::Network);
    ASSERT_EQ(transport->urls.size(), 1u);
    EXPECT_EQ(transport->urls[0], "https://oeis.org/A330805/b330805.txt");
    ASSERT_TRUE(fs::exists(cache.path() / "A330805.bfile"));
    EXPECT_FALSE(fs::exists(cache.path() / "A330805.bfile.tmp"));

    const Client offline(cache.path(), "/nonexistent-fixtures");
    const auto cached = offline.fetch("A330805", SourcePolicy::CacheOnly);
    EXPECT_EQ(cached.bfile, got.bfile);
    EXPECT_TRUE(check(cached.bfile, SequenceId::A, 3).ok());
}

TEST(Client, GarbageFromNetworkFallsBack) {
    TempDir cache;
    const Client client(cache.path(), "/nonexistent-fixtures",
                        std::make_shared<CannedTransport>("<html>not found</html>"));
    EXPECT_THROW(client.fetch("A330805", SourcePolicy::NetworkThenCache), FetchError);
}

TEST(Client, CorruptCacheIsAFetchError) {
    TempDir cache;
    fs::create_directories(cache.path());
    std::ofstream(cache.path() / "A213840.bfile") << "1 1\nbroken\n";
    const Client client(cache.path(), "/nonexistent-fixtures");
    EXPECT_THROW(client.fetch("A213840", SourcePolicy::CacheOnly), FetchError);
}

}  // namespace
