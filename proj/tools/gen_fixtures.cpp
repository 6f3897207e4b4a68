// Regenerates the committed CSV fixtures under tests/fixtures/.  Each file
// is 1e5 seeded draws, one column named x, printed with %.17g so the files
// are bit-stable.  Seeds are fixed here and nowhere else:
//
//   exp1.csv         Exp(1)          = GG(1,1,1),  seed 101
//   gg_2_2_3.csv     GG(2,2,3),                    seed 202
//   uniform01.csv    Uniform(0,1),                 seed 303
//   lognormal01.csv  Lognormal(0,1),               seed 404
//
// Usage: gen_fixtures <output-dir>

#include <cstdio>
#include <string>
#include <vector>

#include "logent/generalized_gamma.hpp"
#include "logent/rng.hpp"

namespace {

constexpr std::size_t n_draws = 100000;

void write_csv(const std::string& path, const std::vector<double>& values) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) {
    std::perror(path.c_str());
    std::exit(1);
  }
  std::fprintf(f, "x\n");
  for (double v : values) std::fprintf(f, "%.17g\n", v);
  std::fclose(f);
  std::printf("wrote %s (%zu rows)\n", path.c_str(), values.size());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: gen_fixtures <output-dir>\n");
    return 1;
  }
  const std::string dir = argv[1];

  write_csv(dir + "/exp1.csv", logent::gg_sample({1.0, 1.0, 1.0}, n_draws, 101));
  write_csv(dir + "/gg_2_2_3.csv", logent::gg_sample({2.0, 2.0, 3.0}, n_draws, 202));

  {
    logent::rng_engine eng = logent::make_engine(303);
    std::vector<double> xs(n_draws);
    for (double& x : xs) x = logent::uniform01(eng);
    write_csv(dir + "/uniform01.csv", xs);
  }
  {
    logent::rng_engine eng = logent::make_engine(404);
    std::vector<double> xs(n_draws);
    for (double& x : xs) x = logent::sample_lognormal(eng, 0.0, 1.0);
    write_csv(dir + "/lognormal01.csv", xs);
  }
  return 0;
}
