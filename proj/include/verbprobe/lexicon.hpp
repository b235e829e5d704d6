#ifndef VERBPROBE_LEXICON_HPP
#define VERBPROBE_LEXICON_HPP

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "verbprobe/errors.hpp"

namespace verbprobe::lexicon {

// One relational pointer of a synset. For antonyms ("!") the source/target
// word numbers select specific lemmas inside the two synsets (1-based;
// 0 means the whole synset).
struct Pointer {
    std::string symbol;
    std::int64_t target_offset = 0;
    char target_pos = 'v';
    int source_word = 0;
    int target_word = 0;
};

struct Synset {
    std::int64_t offset = 0;
    char part_of_speech = 'v';
    std::vector<std::string> lemmas; // lowercase, underscores for spaces
    std::vector<Pointer> pointers;
};

// Immutable after load_wordnet returns; safe for concurrent reads.
struct WordNetIndex {
    // lemma key -> synset offsets in WordNet sense order
    std::unordered_map<std::string, std::vector<std::int64_t>> verb_lemmas;
    std::unordered_map<std::int64_t, Synset> synsets;

    bool has_lemma(const std::string& key) const {
        return verb_lemmas.find(key) != verb_lemmas.end();
    }
};

namespace detail {

inline bool is_license_line(const std::string& line) {
    return line.empty() || line[0] == ' ';
}

inline std::string lower_copy(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return s;
}

[[noreturn]] inline void parse_fail(const std::string& file, int line_no, const std::string& what) {
    throw ParseError(file + ":" + std::to_string(line_no) + ": " + what);
}

inline void parse_index_line(const std::string& file, int line_no, const std::string& line,
                             WordNetIndex& index) {
    std::istringstream in(line);
    std::string lemma, pos;
    int synset_cnt = 0, p_cnt = 0;
    if (!(in >> lemma >> pos >> synset_cnt >> p_cnt))
        parse_fail(file, line_no, "truncated index entry");
    if (pos != "v") return; // only verb entries are in scope
    std::string skip;
    for (int i = 0; i < p_cnt; ++i)
        if (!(in >> skip)) parse_fail(file, line_no, "missing pointer symbol");
    int sense_cnt = 0, tagsense_cnt = 0;
    if (!(in >> sense_cnt >> tagsense_cnt))
        parse_fail(file, line_no, "missing sense counts");
    std::vector<std::int64_t> offsets;
    offsets.reserve(static_cast<std::size_t>(synset_cnt));
    for (int i = 0; i < synset_cnt; ++i) {
        std::int64_t off = 0;
        if (!(in >> off)) parse_fail(file, line_no, "missing synset offset");
        offsets.push_back(off);
    }
    index.verb_lemmas.emplace(lower_copy(lemma), std::move(offsets));
}

inline void parse_data_line(const std::string& file, int line_no, const std::string& line,
                            WordNetIndex& index) {
    std::istringstream in(line);
    Synset syn;
    int lex_filenum = 0;
    std::string ss_type, w_cnt_hex;
    if (!(in >> syn.offset >> lex_filenum >> ss_type >> w_cnt_hex))
        parse_fail(file, line_no, "truncated data entry");
    if (ss_type != "v") return;
    syn.part_of_speech = 'v';
    int w_cnt = 0;
    try {
        w_cnt = std::stoi(w_cnt_hex, nullptr, 16);
    } catch (const std::exception&) {
        parse_fail(file, line_no, "bad word count '" + w_cnt_hex + "'");
    }
    if (w_cnt <= 0) parse_fail(file, line_no, "empty synset");
    for (int i = 0; i < w_cnt; ++i) {
        std::string word, lex_id;
        if (!(in >> word >> lex_id)) parse_fail(file, line_no, "missing word");
        syn.lemmas.push_back(lower_copy(word));
    }
    int p_cnt = 0;
    if (!(in >> p_cnt)) parse_fail(file, line_no, "missing pointer count");
    for (int i = 0; i < p_cnt; ++i) {
        Pointer p;
        std::string st_hex;
        char pos = 0;
        if (!(in >> p.symbol >> p.target_offset >> pos >> st_hex) || st_hex.size() != 4)
            parse_fail(file, line_no, "malformed pointer");
        p.target_pos = pos;
        try {
            p.source_word = std::stoi(st_hex.substr(0, 2), nullptr, 16);
            p.target_word = std::stoi(st_hex.substr(2, 2), nullptr, 16);
        } catch (const std::exception&) {
            parse_fail(file, line_no, "bad source/target field '" + st_hex + "'");
        }
        syn.pointers.push_back(p);
    }
    index.synsets.emplace(syn.offset, std::move(syn));
}

inline void parse_file(const std::filesystem::path& path, WordNetIndex& index, bool is_index) {
    std::ifstream in(path);
    if (!in) throw LoadError("missing WordNet file: " + path.string());
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_license_line(line)) continue;
        if (is_index)
            parse_index_line(path.filename().string(), line_no, line, index);
        else
            parse_data_line(path.filename().string(), line_no, line, index);
    }
}

inline bool has_reciprocal(const WordNetIndex& index, std::int64_t from, std::int64_t to,
                           int source_word, int target_word) {
    auto it = index.synsets.find(to);
    if (it == index.synsets.end()) return false;
    for (const Pointer& p : it->second.pointers) {
        if (p.symbol == "!" && p.target_offset == from &&
            p.source_word == target_word && p.target_word == source_word)
            return true;
    }
    return false;
}

} // namespace detail

// Parse index.verb and data.verb from a WordNet 3.x dict directory.
// Integrity findings (dangling offsets, non-reciprocal antonym pointers) go
// into `warnings` and do not abort the load.
inline WordNetIndex load_wordnet(const std::filesystem::path& directory, WarningLog& warnings) {
    WordNetIndex index;
    detail::parse_file(directory / "index.verb", index, /*is_index=*/true);
    detail::parse_file(directory / "data.verb", index, /*is_index=*/false);

    for (auto& [lemma, offsets] : index.verb_lemmas) {
        for (std::int64_t off : offsets) {
            if (index.synsets.find(off) == index.synsets.end())
                warnings.add("index.verb: lemma '" + lemma + "' references missing synset " +
                             std::to_string(off));
        }
    }
    for (const auto& [off, syn] : index.synsets) {
        for (const Pointer& p : syn.pointers) {
            if (p.symbol != "!" || p.target_pos != 'v') continue;
            if (!detail::has_reciprocal(index, off, p.target_offset, p.source_word, p.target_word))
                warnings.add("data.verb: non-reciprocal antonym pointer " + std::to_string(off) +
                             " -> " + std::to_string(p.target_offset));
        }
    }
    return index;
}

inline WordNetIndex load_wordnet(const std::filesystem::path& directory) {
    WarningLog warnings;
    return load_wordnet(directory, warnings);
}

// Direct antonyms of a verb lemma, ordered by the sense order of the source
// lemma, then pointer order. Within a synset, pointers anchored at the query
// lemma come before pointers anchored at a fellow synset member; the latter
// are still included because WordNet frequently attaches the antonym pointer
// to only one member of the synset (e.g. "enter"/"participate" vs
// "drop_out"). Unknown lemma yields an empty sequence.
inline std::vector<std::string> antonym_of(const WordNetIndex& index, const std::string& lemma) {
    std::vector<std::string> result;
    std::unordered_set<std::string> seen;
    auto lem_it = index.verb_lemmas.find(lemma);
    if (lem_it == index.verb_lemmas.end()) return result;

    auto emit_targets = [&](const Pointer& p) {
        auto tgt_it = index.synsets.find(p.target_offset);
        if (tgt_it == index.synsets.end()) return;
        const Synset& tgt = tgt_it->second;
        if (p.target_word > 0 && p.target_word <= static_cast<int>(tgt.lemmas.size())) {
            const std::string& t = tgt.lemmas[static_cast<std::size_t>(p.target_word - 1)];
            if (seen.insert(t).second) result.push_back(t);
        } else {
            for (const std::string& t : tgt.lemmas)
                if (seen.insert(t).second) result.push_back(t);
        }
    };

    for (std::int64_t off : lem_it->second) {
        auto syn_it = index.synsets.find(off);
        if (syn_it == index.synsets.end()) continue;
        const Synset& syn = syn_it->second;
        int query_word = 0;
        for (std::size_t i = 0; i < syn.lemmas.size(); ++i)
            if (syn.lemmas[i] == lemma) query_word = static_cast<int>(i) + 1;
        for (const Pointer& p : syn.pointers)
            if (p.symbol == "!" && p.target_pos == 'v' && p.source_word == query_word)
                emit_targets(p);
        for (const Pointer& p : syn.pointers)
            if (p.symbol == "!" && p.target_pos == 'v' && p.source_word != query_word)
                emit_targets(p);
    }
    return result;
}

} // namespace verbprobe::lexicon

#endif
