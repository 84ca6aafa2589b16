#pragma once

#include <iosfwd>
#include <string>

namespace oreg::cli {

// Exit codes shared by every subcommand: 0 ok, 1 parse or I/O trouble,
// 2 precondition failure, 3 size cap, 4 verification disagreement.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitDisagreement = 4;

struct RegArgs {
    std::string input;
    std::string method = "auto";  // auto|prop31|thm33|thm310|path|cycle|oracle
    std::string field = "gf2";    // gf2|rational
    int max_polar_vars = 18;
    int threads = 0;
};
int cmd_reg(const RegArgs& args, std::ostream& out, std::ostream& err);

struct BettiArgs {
    std::string input;
    std::string field = "gf2";
    bool quotient = false;
    int max_polar_vars = 18;
    int threads = 0;
};
int cmd_betti(const BettiArgs& args, std::ostream& out, std::ostream& err);

struct HgraphArgs {
    std::string input;
};
int cmd_hgraph(const HgraphArgs& args, std::ostream& out, std::ostream& err);

struct GenArgs {
    std::string family;
    std::string params;  // comma-separated k=v pairs
    std::string out_path;
};
int cmd_gen(const GenArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
    std::string family;
    std::string n_range;       // "1..5" or "4"
    int m = 3;
    int r = 1;
    int wmax = 3;
    int w = 2;
    std::string seeds = "0..9";
    int size = 6;              // vertex count for the random family
    int k = 1;                 // cross edges for the joined cycles
    std::string parts = "1:1:1";
    std::string field = "both";  // gf2|rational|both
    bool parallel = false;
    int threads = 0;
    bool timings = false;      // adds a wall-clock column (non-deterministic)
    int max_polar_vars = 18;
};
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace oreg::cli
