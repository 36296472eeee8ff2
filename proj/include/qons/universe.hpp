#pragma once

#include <string>
#include <unordered_map>

#include "freealg.hpp"

namespace qons::detail {

/* All words of degree <= bound over one alphabet, frozen in ascending
 * canonical order and addressed by dense integer ids.  Left/right products
 * with single letters are precomputed, which is all the elimination kernel
 * ever multiplies by. */
struct Universe {
	Alphabet alph;
	DegreeScheme scheme;
	int bound;

	std::vector<Word> words;  // id -> word, ascending canonical order
	std::vector<int> deg;     // id -> degree
	std::vector<long> cum;    // cum[d] = number of words of degree <= d
	std::vector<Generator> letters;
	std::vector<int> letter_deg;
	// lmul[j][i]: id of letters[j] * words[i]; rmul likewise; -1 if out of range
	std::vector<std::vector<int>> lmul, rmul;

	Universe(Alphabet a, DegreeScheme s, int b) : alph(a), scheme(s), bound(b) {
		words = enumerate_words(a, s, b);
		deg.reserve(words.size());
		std::unordered_map<std::string, int> index;
		index.reserve(words.size() * 2);
		for (size_t i = 0; i < words.size(); ++i) {
			deg.push_back(degree_of(s, words[i]));
			index.emplace(pack(words[i]), int(i));
		}
		cum.assign(bound + 1, 0);
		for (int d : deg) ++cum[d];
		for (int d = 1; d <= bound; ++d) cum[d] += cum[d - 1];

		letters = letters_up_to(a, s, b);
		for (const auto& g : letters) letter_deg.push_back(degree_of(s, g));
		lmul.resize(letters.size());
		rmul.resize(letters.size());
		for (size_t j = 0; j < letters.size(); ++j) {
			lmul[j].assign(words.size(), -1);
			rmul[j].assign(words.size(), -1);
			for (size_t i = 0; i < words.size(); ++i) {
				if (deg[i] + letter_deg[j] > bound) continue;
				Word wl;
				wl.reserve(words[i].size() + 1);
				wl.push_back(letters[j]);
				wl.insert(wl.end(), words[i].begin(), words[i].end());
				lmul[j][i] = index.at(pack(wl));
				wl = words[i];
				wl.push_back(letters[j]);
				rmul[j][i] = index.at(pack(wl));
			}
		}
		idx_ = std::move(index);
	}

	int id_of(const Word& w) const {
		auto it = idx_.find(pack(w));
		return it == idx_.end() ? -1 : it->second;
	}

	static std::string pack(const Word& w) {
		std::string s;
		s.reserve(w.size() * 4);
		for (const auto& g : w) {
			uint32_t c = g.code();
			s.append(reinterpret_cast<const char*>(&c), 4);
		}
		return s;
	}

private:
	std::unordered_map<std::string, int> idx_;
};

}  // namespace qons::detail
