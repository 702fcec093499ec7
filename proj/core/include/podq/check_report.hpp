#pragma once

// Outcome record for a single verification check.  Every identity and
// congruence scan in the library reports through this type; a failing check
// always carries the smallest offending index together with the expected and
// actual coefficient values as decimal strings.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "podq/series.hpp"

namespace podq {

struct Counterexample {
    i64 n = 0;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string name;
    i64 order = 0;
    bool pass = false;
    std::optional<Counterexample> counterexample;
    double ms = 0.0;  // wall-clock cost of the check
};

// Coefficient-wise comparison of lhs against rhs up to min(orders) (or upto,
// if smaller).  "expected" is taken from rhs, "actual" from lhs.
CheckReport compare_series(std::string name, const Series& lhs, const Series& rhs,
                           i64 upto = -1);

// A task bundles one or more related reports (e.g. the two halves of a
// dissection identity).
using CheckTask = std::function<std::vector<CheckReport>()>;

// Runs tasks on up to max_threads workers and returns the reports flattened
// in declaration order, independent of scheduling.  With fail_fast set the
// tasks run sequentially and execution stops after the first task that
// produced a failing report.
std::vector<CheckReport> run_check_tasks(const std::vector<CheckTask>& tasks,
                                         unsigned max_threads, bool fail_fast = false);

// Thread count from the PODQ_THREADS environment variable, falling back to
// the hardware concurrency when unset or unparsable.
unsigned default_thread_count();

}  // namespace podq
