#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcqa/tokenizer.hpp"

namespace mcqa {

inline const std::array<std::string, 4>& canonical_symbols() {
    static const std::array<std::string, 4> syms = {"A", "B", "C", "D"};
    return syms;
}

// A 4-way MCQA instance. `options` and `symbols` are in slot (display) order;
// `gold_index` is the slot holding the correct content.
struct McqaItem {
    std::string question_id;
    std::string question_text;
    std::array<std::string, 4> options;
    std::array<std::string, 4> symbols;
    int gold_index = -1;
};

// Throws std::invalid_argument on violated invariants.
void validate_item(const McqaItem& item);

enum class CounterfactualMode { SwapSymbol, SwapContent };
const char* to_string(CounterfactualMode m);
CounterfactualMode counterfactual_mode_from_string(const std::string& s);

struct CounterfactualInfo {
    std::string of_question;
    CounterfactualMode mode;
    int partner = -1;
};

// Role keys: symbol0..symbol3, content0..content3, boundary0..boundary3,
// end_of_options, answer_prefix, pre_emission. Each maps to ordered token
// positions; no position carries two roles.
using RoleMap = std::map<std::string, std::vector<int>>;

struct AnnotatedPrompt {
    std::string text;
    std::vector<int> tokens;
    RoleMap roles;
    McqaItem item;
    // Composition of all symbol permutations applied via permute_symbols:
    // slot k displays canonical_symbols()[(*permutation)[k]].
    std::optional<std::array<int, 4>> permutation;
    std::optional<CounterfactualInfo> counterfactual_of;
    // When true, winner labels exported for this prompt default to the
    // symbol reading instead of the content reading.
    bool symbol_relabemode = false;

    // Slot of the winning content.
    int content_winner() const { return item.gold_index; }
    // Index of the correct output symbol in the canonical alphabet.
    int symbol_winner() const;
    // The symbol character the subject model should emit.
    const std::string& answer_symbol() const { return item.symbols.at(static_cast<size_t>(item.gold_index)); }

    const std::vector<int>& role(const std::string& key) const;
    bool has_role(const std::string& key) const { return roles.count(key) != 0; }
};

// Renders the exact prompt template
//   Question: <q>\n\nOptions:\n(<S0>) <c0>\n...\n(<S3>) <c3>\n\nAnswer: (
// and annotates every role position. Throws DataError when the vocab is
// closed and a token cannot be encoded.
AnnotatedPrompt build_prompt(const McqaItem& item, Vocab& vocab);

// Checks that no token index carries two roles and that every position is a
// valid token index; throws InvariantError otherwise. Called by build_prompt.
void assert_roles_disjoint(const AnnotatedPrompt& prompt);

// Synthetic color-copying items, distinct by construction.
// Throws std::invalid_argument when count exceeds the number of distinct items.
std::vector<McqaItem> gen_colors(int count, uint64_t seed);

struct ArcLoadReport {
    std::vector<McqaItem> items;
    int skipped_wrong_option_count = 0;
    int skipped_bad_answer_key = 0;
    int skipped_malformed = 0;
    std::vector<std::string> diagnostics;  // first few skip reasons
};

// Loads line-delimited ARC-style records (question.stem, question.choices[]
// with {text,label}, answerKey). Non-4-option items are dropped; numeric
// labels map to letters; skips are counted, never fatal.
ArcLoadReport load_arc(const std::string& path);

// Reassigns option symbols by `perm` while leaving content order unchanged.
// relabel_targets selects the default winner reading on the result (true:
// symbol, false: content); both readings stay computable either way.
AnnotatedPrompt permute_symbols(const AnnotatedPrompt& prompt, const std::array<int, 4>& perm,
                                bool relabel_targets, Vocab& vocab);

// Swaps the gold option's symbol (or content) with `partner`'s. partner < 0
// draws uniformly over the three non-gold slots under `seed` and records the
// choice. Throws std::invalid_argument when partner == gold.
AnnotatedPrompt make_counterfactual(const AnnotatedPrompt& prompt, CounterfactualMode mode, int partner,
                                    uint64_t seed, Vocab& vocab);

enum class LabelSource { Gold, ModelOutput };

struct LabeledExample {
    std::string group_id;
    int option_index = -1;
    int label = 0;  // {0,1} binary or {0..3} winner
    LabelSource source = LabelSource::Gold;
};

// Dataset (de)serialization: one JSON object per line, UTF-8.
void write_dataset_jsonl(const std::string& path, const std::vector<AnnotatedPrompt>& prompts);
std::vector<AnnotatedPrompt> read_dataset_jsonl(const std::string& path, Vocab& vocab);

}  // namespace mcqa
