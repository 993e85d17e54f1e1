#include <gtest/gtest.h>

#include <cstdlib>

#include "decomp1d/format.hpp"

using namespace decomp1d;

TEST(Format, ParenthesizedExponent) {
  EXPECT_EQ(format_parenthesized(1.2839e-2), "1.2839(-02)");
  EXPECT_EQ(format_parenthesized(5.0756e-5), "5.0756(-05)");
  EXPECT_EQ(format_parenthesized(9.99996e-3), "1.0000(-02)");
  EXPECT_EQ(format_parenthesized(3.0), "3.0000(+00)");
  EXPECT_EQ(format_parenthesized(0.0), "0.0000(+00)");
}

TEST(Format, CsvRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 2.0603e-4, 1e-300, 123456789.125}) {
    EXPECT_EQ(std::strtod(format_csv(v).c_str(), nullptr), v);
  }
  EXPECT_EQ(format_csv(0.5), "0.5");
}

TEST(Format, ErrorRow) {
  ErrorReport r{"ex1", Method::Improved, 512, 4, 0.5, 0.25, Reference::ClosedForm};
  EXPECT_EQ(to_csv_row(r), "ex1,512,4,improved,0.5,0.25,closed_form");
  r.reference = Reference::FineGrid;
  r.method = Method::Original;
  EXPECT_EQ(to_csv_row(r), "ex1,512,4,original,0.5,0.25,fine_grid");
  EXPECT_STREQ(kErrorCsvHeader, "problem,N,M,method,l2_error,h1_error,reference");
}
