// Classifies the stored sample curve of every family and prints one line per case.
#include <iostream>

#include "supercurve/supercurve.hpp"

int main() {
    using namespace supercurve;
    const LociDatabase db = LociDatabase::load_default();
    const Classifier classifier(db);
    for (const auto* fam : db.families()) {
        std::cout << fam->case_no << "\t";
        try {
            SuperellipticCurve c = instantiate_sample(db, fam->case_no);
            auto r = classifier.classify(c);
            std::cout << format_curve(c) << "\t";
            if (r.case_no)
                std::cout << "case " << *r.case_no << " (" << confidence_name(r.confidence) << ")";
            else
                std::cout << "unclassified: " << r.reason;
        } catch (const Error& e) {
            std::cout << "error: " << e.what();
        }
        std::cout << "\n";
    }
}
