#include "dcgf/bfile.hpp"

#include <algorithm>
#include <sstream>

namespace dcgf {

namespace {

bool integer_token(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + i, s.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; });
}

}  // namespace

SequenceSample parse_bfile(const std::string& text) {
    SequenceSample sample;
    bool have_first = false;
    long long expected_index = 0;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::istringstream fields(line);
        std::string index_str, value_str, extra;
        fields >> index_str >> value_str;
        if (value_str.empty() || !integer_token(index_str) || !integer_token(value_str))
            throw ParseError("line " + std::to_string(line_no) +
                                 ": expected \"index value\", got \"" + line + "\"",
                             line_no, 1);
        if (fields >> extra)
            throw ParseError("line " + std::to_string(line_no) +
                                 ": trailing data \"" + extra + "\"",
                             line_no, 1);

        long long index = 0;
        try {
            index = std::stoll(index_str);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": index \"" +
                                 index_str + "\" out of range",
                             line_no, 1);
        }
        if (!have_first) {
            sample.offset = index;
            expected_index = index;
            have_first = true;
        }
        if (index != expected_index)
            throw ParseError("line " + std::to_string(line_no) + ": gap at index " +
                                 std::to_string(expected_index) + " (got " +
                                 std::to_string(index) + ")",
                             line_no, 1);
        ++expected_index;
        sample.values.emplace_back(value_str);
    }
    if (!have_first) throw ParseError("no data lines", line_no, 1);
    return sample;
}

std::string to_bfile(const SequenceSample& sample) {
    std::ostringstream out;
    for (size_t j = 0; j < sample.values.size(); ++j)
        out << sample.offset + static_cast<long long>(j) << " "
            << sample.values[j].str() << "\n";
    return out.str();
}

SeqCompare compare(const SequenceSample& sample, const std::vector<Int>& generated,
                   long long generated_offset) {
    long long lo = std::max(sample.offset, generated_offset);
    long long hi = std::min(sample.offset + static_cast<long long>(sample.values.size()),
                            generated_offset + static_cast<long long>(generated.size()));
    if (lo >= hi) throw std::invalid_argument("empty overlap");

    SeqCompare result;
    for (long long n = lo; n < hi; ++n) {
        const Int& want = sample.values[static_cast<size_t>(n - sample.offset)];
        const Int& got = generated[static_cast<size_t>(n - generated_offset)];
        if (want != got) {
            result.pass = false;
            result.overlap = n - lo;
            result.fail_index = n;
            result.expected = want;
            result.actual = got;
            return result;
        }
    }
    result.pass = true;
    result.overlap = hi - lo;
    return result;
}

}  // namespace dcgf
