#pragma once

// Named verification suites shared by the command line tool and the tests.

#include "syang/report.hpp"
#include "syang/pbw.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syang {

/// Random word of generators with length in [1, max_len] and superscripts in [1, max_r].
std::vector<Generator> random_word(std::uint64_t& state, std::uint32_t max_len, std::uint32_t max_r);

/// normal_form(w) against every parenthesisation evaluated with multiply(), plus
/// Z-degree and parity preservation and the weight bound (weight is a filtration).
Check pbw_confluence(Field f, std::size_t words, std::uint32_t max_len, std::uint32_t max_r, std::uint64_t seed);

/// Products of the word under all bracketings.
std::vector<AlgebraElement> all_bracketings(Field f, const std::vector<Generator>& word);

struct SuiteConfig {
    std::optional<std::size_t> order;  // suite default when unset
    std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();
/// Order the suite runs at when none is given.
std::size_t suite_default_order(const std::string& name, Field f);
/// Throws std::invalid_argument for an unknown suite.
Report run_suite(const std::string& name, Field f, const SuiteConfig& cfg);

}  // namespace syang
