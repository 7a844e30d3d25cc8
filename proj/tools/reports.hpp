#pragma once
// Report builders behind the CLI subcommands. Each returns the JSON report,
// an overall verdict and a short human summary; nothing here touches argv or
// the filesystem except building_ball's explicit output path.

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "spgeo/cosetver.hpp"
#include "spgeo/reptheory.hpp"
#include "spgeo/zetaeng.hpp"

namespace spgeo::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Malformed input; the CLI maps it to exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json report;
  bool pass = false;
  std::vector<std::string> summary;
};

// Row-major "num/den" strings.
json matrix_json(const QMatrix& m);
json series_json(const QSeries& s);

Outcome verify_cosets(long p);
Outcome building_ball(long p, int radius, const std::string& out_path);
Outcome verify_table3(const std::vector<RepType>& types);
Outcome verify_identity();
Outcome zeta(const json& input, int order);
Outcome ramanujan(const json& input, double tol);

// "I,IIa,VId" -> types; throws InputError on an unknown name.
std::vector<RepType> parse_type_list(const std::string& list);
ComplexData parse_complex_data(const json& j);

}  // namespace spgeo::cli
