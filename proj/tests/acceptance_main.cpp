#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>

namespace {

// Prints one PASS/FAIL line per acceptance criterion, alongside the
// regular doctest output.
struct CriterionReporter : public doctest::IReporter {
    const doctest::TestCaseData* current = nullptr;

    explicit CriterionReporter(const doctest::ContextOptions&) {}

    void report_query(const doctest::QueryData&) override {}
    void test_run_start() override {}
    void test_run_end(const doctest::TestRunStats&) override {}
    void test_case_start(const doctest::TestCaseData& data) override { current = &data; }
    void test_case_reenter(const doctest::TestCaseData&) override {}
    void test_case_end(const doctest::CurrentTestCaseStats& stats) override {
        if (current == nullptr) return;
        std::printf("[%s] %s (%.2f s)\n", stats.testCaseSuccess ? "PASS" : "FAIL", current->m_name, stats.seconds);
        std::fflush(stdout);
        current = nullptr;
    }
    void test_case_exception(const doctest::TestCaseException&) override {}
    void subcase_start(const doctest::SubcaseSignature&) override {}
    void subcase_end() override {}
    void log_assert(const doctest::AssertData&) override {}
    void log_message(const doctest::MessageData&) override {}
    void test_case_skipped(const doctest::TestCaseData& data) override {
        std::printf("[SKIP] %s\n", data.m_name);
        std::fflush(stdout);
    }
};

} // namespace

REGISTER_LISTENER("criterion-lines", 1, CriterionReporter);

int main(int argc, char** argv) {
    doctest::Context context(argc, argv);
    return context.run();
}
