#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace botdna {

enum class Label { genuine, spambot };

const char* label_name(Label label);

// One observed action in an account timeline. A record is never both a
// retweet and a reply; ingestion rejects such rows.
struct ActionRecord {
    std::string account_id;
    std::int64_t timestamp = 0;  // seconds since epoch, >= 0
    bool is_retweet = false;
    bool is_reply = false;
    bool has_url = false;
    bool has_hashtag = false;
};

// Maps every action to exactly one symbol of a small ordered alphabet.
class Alphabet {
public:
    using Rule = std::function<char(const ActionRecord&)>;

    // Throws std::invalid_argument if symbols are not distinct or fewer than 2.
    Alphabet(std::string name, std::string symbols, Rule rule);

    const std::string& name() const { return name_; }
    const std::string& symbols() const { return symbols_; }

    char encode(const ActionRecord& record) const;
    bool contains(char symbol) const;

private:
    std::string name_;
    std::string symbols_;
    Rule rule_;
};

// Built-in alphabets:
//   type3    — A: plain tweet, T: retweet, C: reply
//   content3 — A: plain tweet, U: contains url, H: contains hashtag,
//              with precedence url > hashtag > plain
Alphabet builtin_alphabet(const std::string& name);
const std::vector<std::string>& builtin_alphabet_names();

// An account timeline encoded as one symbol per action, in ascending
// timestamp order.
struct DigitalDna {
    std::string account_id;
    std::string sequence;
    std::string alphabet_name;
};

// Sorts records by timestamp (stable, so file order breaks ties) and encodes
// each one. Throws on an empty record list or mixed account ids.
DigitalDna encode_timeline(std::vector<ActionRecord> records, const Alphabet& alphabet);

}  // namespace botdna
