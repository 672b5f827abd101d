#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "zetaodd/gen_bernoulli.hpp"

namespace zetaodd {
namespace {

namespace fs = std::filesystem;

Rational q(long num, long den) { return Rational(BigInt(num), BigInt(den)); }

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("zetaodd-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(GenBernoulli, KnownValues) {
  EXPECT_EQ(gen_bernoulli(0, 3), Rational(1));
  EXPECT_EQ(gen_bernoulli(2, 1), q(1, 6));
  EXPECT_EQ(gen_bernoulli(4, 1), q(-1, 30));
  EXPECT_EQ(gen_bernoulli(2, 2), q(5, 6));
  EXPECT_EQ(gen_bernoulli(3, 2), q(-1, 2));
}

TEST(GenBernoulli, DegreeOneIsMinusHalfOrder) {
  for (int l = 1; l <= 8; ++l) EXPECT_EQ(gen_bernoulli(1, l), q(-l, 2)) << "l=" << l;
}

TEST(SeriesOracle, SmallCases) {
  EXPECT_EQ(series_oracle(1, 3), (std::vector<Rational>{1, q(-1, 2), q(1, 6), 0}));
  EXPECT_EQ(series_oracle(2, 0), (std::vector<Rational>{1}));
}

TEST(GenBernoulli, ClosedFormMatchesSeriesUpTo12) {
  for (int l = 1; l <= 12; ++l) {
    const auto oracle = series_oracle(l, 12);
    for (int n = 0; n <= 12; ++n) {
      ASSERT_EQ(gen_bernoulli_closed_form(n, l), oracle[static_cast<std::size_t>(n)]) << "n=" << n << " l=" << l;
    }
  }
}

TEST(GenBernoulli, OrderOneMatchesAkiyamaTanigawa) {
  const auto classical = testing::akiyama_tanigawa(30);
  for (int n = 0; n <= 30; ++n) {
    ASSERT_EQ(gen_bernoulli(n, 1).gmp(), classical[static_cast<std::size_t>(n)]) << "n=" << n;
  }
}

TEST(GenBernoulli, OddClassicalValuesVanish) {
  for (int n : {3, 5, 7, 9, 11}) EXPECT_TRUE(gen_bernoulli(n, 1).is_zero()) << n;
}

TEST(GenBernoulliPoly, AtZeroIsTheNumber) {
  for (int l = 1; l <= 5; ++l) {
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(gen_bernoulli_poly(n, l, 0), gen_bernoulli(n, l));
  }
}

TEST(GenBernoulliPoly, Examples) {
  // B_1^(1)(x) = x - 1/2, B_2^(1)(x) = x^2 - x + 1/6
  EXPECT_EQ(gen_bernoulli_poly(1, 1, q(3, 4)), q(1, 4));
  EXPECT_EQ(gen_bernoulli_poly(2, 1, 2), q(13, 6));
  EXPECT_EQ(gen_bernoulli_poly(3, 2, 2), -gen_bernoulli(3, 2));
}

TEST(GenBernoulliPoly, ReflectionAtOrder) {
  for (int l = 1; l <= 8; ++l) {
    for (int n = 0; n <= 10; ++n) {
      const Rational b = gen_bernoulli(n, l);
      ASSERT_EQ(gen_bernoulli_poly(n, l, l), n % 2 == 0 ? b : -b) << "n=" << n << " l=" << l;
    }
  }
}

TEST(GenBernoulli, RejectsBadIndices) {
  EXPECT_THROW(gen_bernoulli_closed_form(-1, 2), std::invalid_argument);
  EXPECT_THROW(gen_bernoulli_closed_form(2, 0), std::invalid_argument);
}

TEST(BernoulliTable, SaveLoadRoundTrip) {
  TempDir dir;
  const fs::path file = dir.path() / "b.cache";
  BernoulliTable written;
  written.fill(8, 6);
  EXPECT_EQ(written.size(), 9u * 6u);
  EXPECT_EQ(written.max_degree_n(), 8);
  EXPECT_EQ(written.max_order_l(), 6);
  written.save(file);

  BernoulliTable reloaded;
  reloaded.load(file, false);
  EXPECT_EQ(reloaded.entries(), written.entries());
  EXPECT_EQ(reloaded.serialize(), written.serialize());
  EXPECT_TRUE(reloaded.contains(8, 6));
  EXPECT_FALSE(reloaded.contains(9, 6));
}

TEST(BernoulliTable, SerializationIsSortedByOrderThenDegree) {
  BernoulliTable t;
  t.get(3, 2);
  t.get(0, 1);
  t.get(2, 2);
  t.get(5, 1);
  EXPECT_EQ(t.serialize(), "B 0 1 1\nB 5 1 0\nB 2 2 5/6\nB 3 2 -1/2\n");
}

TEST(BernoulliTable, AbsentFileIsEmpty) {
  TempDir dir;
  BernoulliTable t;
  t.load(dir.path() / "missing", false);
  EXPECT_EQ(t.size(), 0u);
}

TEST(BernoulliTable, TamperedEntryIsNamed) {
  BernoulliTable t;
  try {
    t.load_text("B 0 1 1\nB 2 1 2/6\n", false);
    FAIL() << "tampered value accepted";
  } catch (const CacheError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("(n=2, l=1)"), std::string::npos) << what;
    EXPECT_NE(what.find("line 2"), std::string::npos) << what;
  }
  EXPECT_EQ(t.size(), 0u);
}

TEST(BernoulliTable, TrustSkipsRevalidation) {
  BernoulliTable t;
  t.load_text("B 2 1 2/6\n", true);
  EXPECT_EQ(t.get(2, 1), q(1, 3));
}

TEST(BernoulliTable, MalformedLinesReportLineNumber) {
  for (const char* text : {"B 1 1\n", "C 1 1 -1/2\n", "B 1 0 1\n", "B 1 1 x\n", "B 1 1 1/2 extra\n"}) {
    BernoulliTable t;
    const std::string input = std::string("B 0 1 1\n") + text;
    try {
      t.load_text(input, false);
      FAIL() << "accepted: " << text;
    } catch (const CacheError& e) {
      EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
  }
}

TEST(BernoulliTable, ConcurrentReadersAgree) {
  BernoulliTable t;
  t.fill(4, 4);
  std::atomic<int> mismatches{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (int l = 1; l <= 10; ++l) {
        for (int n = 0; n <= 10; ++n) {
          const int nn = (n + w) % 11;
          if (t.get(nn, l) != gen_bernoulli_closed_form(nn, l)) ++mismatches;
        }
      }
    });
  }
  for (auto& th : workers) th.join();
  EXPECT_EQ(mismatches.load(), 0);
  EXPECT_EQ(t.size(), 11u * 10u);
}

}  // namespace
}  // namespace zetaodd
