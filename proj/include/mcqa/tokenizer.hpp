#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mcqa/common.hpp"

namespace mcqa {

// Word-level tokenizer. Emits one token per word, per structural character
// (newline, parenthesis, colon, period, question mark, comma, ...) and skips
// spaces/tabs. This keeps every role position exactly one token wide for the
// canonical prompt template; external-model tokenizations enter only through
// ingested traces.
std::vector<std::string> tokenize_text(std::string_view text);

class Vocab {
public:
    Vocab() = default;

    // Closed vocab: encoding an unknown token throws DataError.
    static Vocab color_task_vocab();

    int add(const std::string& tok);
    int lookup(const std::string& tok) const;  // -1 if absent

    // Encodes text; throws DataError naming the offending token when the
    // vocab is closed and the token is unknown.
    std::vector<int> encode(std::string_view text);
    int encode_one(const std::string& tok);

    const std::string& token(int id) const { return id_to_tok_.at(static_cast<size_t>(id)); }
    int size() const { return static_cast<int>(id_to_tok_.size()); }
    bool closed() const { return closed_; }
    void set_closed(bool c) { closed_ = c; }

private:
    std::vector<std::string> id_to_tok_;
    std::unordered_map<std::string, int> tok_to_id_;
    bool closed_ = false;
};

// The fixed 11-color palette used by the synthetic color-copying task.
const std::vector<std::string>& color_vocabulary();

}  // namespace mcqa
