#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "blowup/errors.hpp"
#include "blowup/groebner.hpp"
#include "blowup/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "blowup: blowup algebras of polynomial and semigroup-ring ideals, with "
        "Cohen-Macaulayness and integral-closure checkers"};

    std::string inputPath, outputPath, format = "human", fieldOverride;
    std::uint64_t seed = UINT64_MAX;
    int trials = -1;
    long budgetPairs = -1, budgetDegree = -1;

    app.add_option("--input", inputPath, "job file (text schema or JSON)")->required();
    app.add_option("--output", outputPath, "write the report here instead of stdout");
    app.add_option("--format", format, "human|machine")->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--seed", seed, "override the job seed");
    app.add_option("--field", fieldOverride, "override the job field (gf:P or qq)");
    app.add_option("--trials", trials, "override the per-step trial count");
    app.add_option("--budget-pairs", budgetPairs, "Groebner S-pair cap");
    app.add_option("--budget-degree", budgetDegree, "Groebner lcm total-degree cap");

    CLI11_PARSE(app, argc, argv);

    if (budgetPairs > 0) blowup::default_budget().maxPairs = budgetPairs;
    if (budgetDegree > 0) blowup::default_budget().maxDegree = budgetDegree;

    try {
        blowup::Job job = blowup::parse_job_file(inputPath);
        if (seed != UINT64_MAX) job.seed = seed;
        if (!fieldOverride.empty()) job.fieldSpec = fieldOverride;
        if (trials > 0) job.trials = trials;

        blowup::RunResult res = blowup::run_job(job);
        std::string text = format == "machine" ? blowup::emit_machine(res.machine) : res.human;
        if (outputPath.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(outputPath, std::ios::binary);
            if (!out) {
                std::cerr << "cannot open output file: " << outputPath << "\n";
                return 2;
            }
            out << text;
        }
        return res.exitCode;
    } catch (const blowup::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const blowup::InvariantViolation& e) {
        std::cerr << "internal invariant violation (toolkit bug): " << e.what() << "\n";
        return 4;
    } catch (const blowup::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
