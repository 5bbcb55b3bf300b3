#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "flagprim/cones.hpp"

namespace flagprim {

struct CellWitness {
  std::string signs;  // one of '+', '-', '0' per arrangement normal
  QVec point;         // exact representative linear form
  int chamber = -1;   // index into the certificate, -1 if uncovered
};

struct SeparationCertificate {
  std::vector<WeylElement> chambers;
  std::vector<CellWitness> cells;
};

struct SepResult {
  bool exact = false;
  int value = 0;  // valid when exact
  int lower = 0;
  int upper = 0;
  SeparationCertificate certificate;  // best cover found
  int proof_cells = 0;
};

struct SepOptions {
  std::chrono::milliseconds budget{60000};
  int workers = 1;
  bool enumerate_cells = true;
};

SepResult sep_index(const RootSystem& R, const SepOptions& opt = {});
// memoized exact value for rank <= 3, -1 otherwise
int sep_known(const RootSystem& R);

// primitive integer normals of the W-orbits of fundamental weights, up to sign
std::vector<Weight> arrangement_normals(const RootSystem& R);
// every cell of dimension >= 1 of the arrangement, one exact point each
std::vector<CellWitness> arrangement_cells(const RootSystem& R);
// rays of the arrangement, primitive integer vectors
std::vector<Weight> arrangement_rays(const RootSystem& R);

// l(w varpi_k) > 0 for all k
bool chamber_covers(const Chamber& c, const QVec& l);
bool verify_separating(const RootSystem& R, const std::vector<WeylElement>& chambers);

struct DihedralResult {
  int value = 0;
  std::vector<int> arcs;  // chamber indices 0..2p-1
};
DihedralResult sep_index_dihedral(int p);
// open arc of chamber k in units of pi/(2p): (2k + 2 - p, 2k + p)
bool dihedral_covers(int p, const std::vector<int>& arcs);
// exhaustive minimum, for small p only
int sep_index_dihedral_bruteforce(int p);

}  // namespace flagprim
