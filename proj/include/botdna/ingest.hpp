#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "botdna/dna.hpp"

namespace botdna {

enum class DatasetFormat { csv, jsonl };

DatasetFormat dataset_format_from_string(const std::string& name);

// Per-account record groups, ordered by first appearance in the input file.
// Each group is sorted ascending by timestamp (stable w.r.t. file order).
struct Dataset {
    std::vector<std::vector<ActionRecord>> accounts;
    std::size_t dropped_empty_accounts = 0;
};

// CSV input: header `account_id,timestamp,is_retweet,is_reply,has_url,has_hashtag`,
// booleans as 0/1. JSONL input: one object per line with the same six fields.
// Malformed rows raise std::runtime_error naming the line number.
Dataset parse_dataset(const std::filesystem::path& path, DatasetFormat format);

std::vector<DigitalDna> encode_dataset(const Dataset& dataset, const Alphabet& alphabet);

// DNA interchange format: one line per account, `account_id<TAB>sequence`.
void write_dna_file(const std::filesystem::path& path, const std::vector<DigitalDna>& dnas);

struct DnaFile {
    std::vector<DigitalDna> dnas;
    std::size_t skipped_empty = 0;  // accounts excluded for an empty sequence
};

DnaFile read_dna_file(const std::filesystem::path& path);

// Label CSVs: header `account_id,label`. Truth files use `bot`/`genuine`;
// classifier output uses `spambot`/`genuine`. The reader accepts both spellings.
std::map<std::string, Label> read_label_csv(const std::filesystem::path& path);
void write_label_csv(const std::filesystem::path& path,
                     const std::map<std::string, Label>& labels,
                     bool truth_style = false);

}  // namespace botdna
