#include "mcqa/tokenizer.hpp"

#include <cstdio>

namespace mcqa {

std::string fmt_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

namespace {

bool is_structural(char c) {
    switch (c) {
        case '(':
        case ')':
        case ':':
        case '.':
        case '?':
        case ',':
        case ';':
        case '!':
        case '"':
            return true;
        default:
            return false;
    }
}

}  // namespace

std::vector<std::string> tokenize_text(std::string_view text) {
    std::vector<std::string> out;
    std::string word;
    auto flush = [&] {
        if (!word.empty()) {
            out.push_back(word);
            word.clear();
        }
    };
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r') {
            flush();
        } else if (c == '\n') {
            flush();
            out.emplace_back(1, '\n');
        } else if (is_structural(c)) {
            flush();
            out.emplace_back(1, c);
        } else {
            word.push_back(c);
        }
    }
    flush();
    return out;
}

int Vocab::add(const std::string& tok) {
    auto it = tok_to_id_.find(tok);
    if (it != tok_to_id_.end()) return it->second;
    if (closed_) {
        std::string shown = tok == "\n" ? "\\n" : tok;
        throw DataError("unencodable token '" + shown + "' for closed vocabulary");
    }
    int id = static_cast<int>(id_to_tok_.size());
    id_to_tok_.push_back(tok);
    tok_to_id_.emplace(tok, id);
    return id;
}

int Vocab::lookup(const std::string& tok) const {
    auto it = tok_to_id_.find(tok);
    return it == tok_to_id_.end() ? -1 : it->second;
}

int Vocab::encode_one(const std::string& tok) { return add(tok); }

std::vector<int> Vocab::encode(std::string_view text) {
    std::vector<int> ids;
    for (const auto& t : tokenize_text(text)) ids.push_back(add(t));
    return ids;
}

const std::vector<std::string>& color_vocabulary() {
    static const std::vector<std::string> colors = {
        "white", "grey", "black", "brown", "red",   "orange",
        "yellow", "green", "blue",  "purple", "pink",
    };
    return colors;
}

Vocab Vocab::color_task_vocab() {
    Vocab v;
    for (const char* t : {"\n", "(", ")", ":", ".", "?"}) v.add(t);
    for (const char* t : {"Question", "Options", "Answer", "This", "this", "object", "is", "What", "color"})
        v.add(t);
    for (const auto& c : color_vocabulary()) v.add(c);
    for (const char* t : {"A", "B", "C", "D"}) v.add(t);
    v.set_closed(true);
    return v;
}

}  // namespace mcqa
