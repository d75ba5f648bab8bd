#ifndef WORDWALK_FORMAT_HPP
#define WORDWALK_FORMAT_HPP

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "wordwalk/error.hpp"
#include "wordwalk/walk.hpp"
#include "wordwalk/word.hpp"

namespace wordwalk {

// Two word spellings. In chars mode each character is one letter: digits
// carry their numeric value (so the numeric families print as 1213...),
// any other printable character carries its character code. Tokens mode is
// whitespace-separated letter codes and can spell every word. Both modes
// round-trip exactly; chars mode refuses codes that would not.
enum class WordFormat { chars, tokens };

inline Word parse_word(std::string_view text, WordFormat format) {
    std::vector<int> letters;
    if (format == WordFormat::chars) {
        for (char c : text) {
            unsigned char uc = static_cast<unsigned char>(c);
            if (std::isdigit(uc))
                letters.push_back(c - '0');
            else if (std::isprint(uc) && !std::isspace(uc))
                letters.push_back(static_cast<int>(uc));
            else
                raise(Error::Code::invalid_input,
                      "parse_word: unusable character in chars mode (try --tokens)");
        }
    } else {
        std::istringstream in{std::string(text)};
        std::string token;
        while (in >> token) {
            try {
                std::size_t used = 0;
                int value = std::stoi(token, &used);
                if (used != token.size() || value < 0) throw std::invalid_argument(token);
                letters.push_back(value);
            } catch (const std::exception&) {
                raise(Error::Code::invalid_input, "parse_word: bad token '" + token + "'");
            }
        }
    }
    return Word(std::move(letters));
}

inline bool chars_printable(const Word& w) {
    for (int a : w.letters()) {
        if (a <= 9) continue;
        if (a >= 33 && a <= 126 && !(a >= '0' && a <= '9')) continue;
        return false;
    }
    return true;
}

inline std::string print_word(const Word& w, WordFormat format) {
    std::string out;
    if (format == WordFormat::chars) {
        if (!chars_printable(w))
            raise(Error::Code::unprintable, "print_word: word needs tokens mode");
        for (int a : w.letters()) out += a <= 9 ? static_cast<char>('0' + a) : static_cast<char>(a);
    } else {
        for (int a : w.letters()) {
            if (!out.empty()) out += ' ';
            out += std::to_string(a);
        }
    }
    return out;
}

// Walks are spelled as comma-separated 1-based positions, the usual course
// of values.
inline std::vector<int> parse_course(std::string_view text) {
    std::vector<int> course;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            course.push_back(value);
        } catch (const std::exception&) {
            raise(Error::Code::invalid_input, "parse_course: bad position '" + token + "'");
        }
    }
    return course;
}

inline std::string print_course(const Stroll& f) {
    std::string out;
    for (int p : f.course()) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}

// Single letter for axis labels and reports: digit value or the character
// itself, falling back to the numeric code.
inline std::string letter_label(int a) {
    if (a <= 9) return std::string(1, static_cast<char>('0' + a));
    if (a >= 33 && a <= 126) return std::string(1, static_cast<char>(a));
    return std::to_string(a);
}

} // namespace wordwalk

#endif
