#pragma once

// Inspection of the built shared object and the shipped C headers.

#include <dlfcn.h>
#include <elf.h>

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffibench::testing {

inline const std::set<std::string> kExpectedExports = {"mean",       "stddev",       "array_init",
                                                       "array_mean", "array_stddev", "array_free"};

/// Defined, default-visibility global/weak symbols in .dynsym of a 64-bit
/// little-endian ELF file.
inline std::set<std::string> exported_symbols(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    const std::vector<char> image((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (image.size() < sizeof(Elf64_Ehdr) || std::memcmp(image.data(), ELFMAG, SELFMAG) != 0 ||
        image[EI_CLASS] != ELFCLASS64) {
        throw std::runtime_error(path + " is not a 64-bit ELF file");
    }
    const auto read = [&image](std::size_t offset, auto &out) {
        if (offset + sizeof(out) > image.size()) {
            throw std::runtime_error("truncated ELF file");
        }
        std::memcpy(&out, image.data() + offset, sizeof(out));
    };

    Elf64_Ehdr eh{};
    read(0, eh);
    std::vector<Elf64_Shdr> sections(eh.e_shnum);
    for (std::size_t i = 0; i < sections.size(); ++i) {
        read(eh.e_shoff + i * eh.e_shentsize, sections[i]);
    }

    std::set<std::string> names;
    for (const auto &sh : sections) {
        if (sh.sh_type != SHT_DYNSYM) {
            continue;
        }
        const auto &strtab = sections.at(sh.sh_link);
        const std::size_t count = sh.sh_size / sizeof(Elf64_Sym);
        for (std::size_t i = 1; i < count; ++i) {
            Elf64_Sym sym{};
            read(sh.sh_offset + i * sizeof(Elf64_Sym), sym);
            const auto bind = ELF64_ST_BIND(sym.st_info);
            const auto type = ELF64_ST_TYPE(sym.st_info);
            if (sym.st_shndx == SHN_UNDEF || (bind != STB_GLOBAL && bind != STB_WEAK) ||
                ELF64_ST_VISIBILITY(sym.st_other) != STV_DEFAULT || type == STT_SECTION || type == STT_FILE) {
                continue;
            }
            const std::size_t name_at = strtab.sh_offset + sym.st_name;
            if (name_at >= image.size()) {
                throw std::runtime_error("bad symbol name offset");
            }
            names.emplace(image.data() + name_at);
        }
    }
    return names;
}

/// Every expected symbol resolves through dlopen/dlsym.
inline bool all_exports_resolve(const std::string &path, std::string *error = nullptr) {
    void *lib = dlopen(path.c_str(), RTLD_NOW | RTLD_LOCAL);
    if (lib == nullptr) {
        if (error != nullptr) *error = dlerror();
        return false;
    }
    bool ok = true;
    for (const auto &name : kExpectedExports) {
        if (dlsym(lib, name.c_str()) == nullptr) {
            ok = false;
            if (error != nullptr) *error = "unresolved " + name;
        }
    }
    dlclose(lib);
    return ok;
}

/// Syntax-checks a header as a standalone C99 translation unit.
inline bool header_compiles_as_c(const std::string &compiler, const std::string &header) {
    const std::string cmd = "\"" + compiler + "\" -std=c99 -pedantic -Wall -Wextra -Werror -fsyntax-only -x c \"" +
                            header + "\" > /dev/null 2>&1";
    return std::system(cmd.c_str()) == 0;
}

}  // namespace ffibench::testing
