#pragma once

// Default taxonomy shipped with the library: 252 subject categories, 14 broad
// areas, 9 multidisciplinary flags. Generated from data/default_taxonomy.tsv;
// edit the TSV and regenerate rather than editing this header.

namespace refclass {

inline constexpr const char* kDefaultTaxonomyTsv =
    "label\tbroad_area\tmultidisciplinary\n"
    "Agriculture, Dairy & Animal Science\tAgricultural sciences\t0\n"
    "Agriculture, Multidisciplinary\tAgricultural sciences\t1\n"
    "Agronomy\tAgricultural sciences\t0\n"
    "Fisheries\tAgricultural sciences\t0\n"
    "Food Science & Technology\tAgricultural sciences\t0\n"
    "Forestry\tAgricultural sciences\t0\n"
    "Green & Sustainable Science & Technology\tAgricultural sciences\t0\n"
    "Horticulture\tAgricultural sciences\t0\n"
    "Astronomy & Astrophysics\tAstronomy\t0\n"
    "Anatomy & Morphology\tBiological sciences\t0\n"
    "Biochemical Research Methods\tBiological sciences\t0\n"
    "Biochemistry & Molecular Biology\tBiological sciences\t0\n"
    "Biodiversity Conservation\tBiological sciences\t0\n"
    "Biology\tBiological sciences\t0\n"
    "Biophysics\tBiological sciences\t0\n"
    "Biotechnology & Applied Microbiology\tBiological sciences\t0\n"
    "Cell & Tissue Engineering\tBiological sciences\t0\n"
    "Cell Biology\tBiological sciences\t0\n"
    "Developmental Biology\tBiological sciences\t0\n"
    "Ecology\tBiological sciences\t0\n"
    "Entomology\tBiological sciences\t0\n"
    "Evolutionary Biology\tBiological sciences\t0\n"
    "Genetics & Heredity\tBiological sciences\t0\n"
    "Microbiology\tBiological sciences\t0\n"
    "Mycology\tBiological sciences\t0\n"
    "Nutrition & Dietetics\tBiological sciences\t0\n"
    "Ornithology\tBiological sciences\t0\n"
    "Paleontology\tBiological sciences\t0\n"
    "Parasitology\tBiological sciences\t0\n"
    "Physiology\tBiological sciences\t0\n"
    "Plant Sciences\tBiological sciences\t0\n"
    "Reproductive Biology\tBiological sciences\t0\n"
    "Virology\tBiological sciences\t0\n"
    "Zoology\tBiological sciences\t0\n"
    "Chemistry, Analytical\tChemistry\t0\n"
    "Chemistry, Applied\tChemistry\t0\n"
    "Chemistry, Inorganic & Nuclear\tChemistry\t0\n"
    "Chemistry, Medicinal\tChemistry\t0\n"
    "Chemistry, Multidisciplinary\tChemistry\t1\n"
    "Chemistry, Organic\tChemistry\t0\n"
    "Chemistry, Physical\tChemistry\t0\n"
    "Crystallography\tChemistry\t0\n"
    "Electrochemistry\tChemistry\t0\n"
    "Polymer Science\tChemistry\t0\n"
    "Spectroscopy\tChemistry\t0\n"
    "Computer Science, Artificial Intelligence\tComputer sciences\t0\n"
    "Computer Science, Cybernetics\tComputer sciences\t0\n"
    "Computer Science, Hardware & Architecture\tComputer sciences\t0\n"
    "Computer Science, Information Systems\tComputer sciences\t0\n"
    "Computer Science, Interdisciplinary Applications\tComputer sciences\t0\n"
    "Computer Science, Software Engineering\tComputer sciences\t0\n"
    "Computer Science, Theory & Methods\tComputer sciences\t0\n"
    "Medical Informatics\tComputer sciences\t0\n"
    "Agricultural Engineering\tEngineering\t0\n"
    "Automation & Control Systems\tEngineering\t0\n"
    "Construction & Building Technology\tEngineering\t0\n"
    "Energy & Fuels\tEngineering\t0\n"
    "Engineering, Aerospace\tEngineering\t0\n"
    "Engineering, Biomedical\tEngineering\t0\n"
    "Engineering, Chemical\tEngineering\t0\n"
    "Engineering, Civil\tEngineering\t0\n"
    "Engineering, Electrical & Electronic\tEngineering\t0\n"
    "Engineering, Environmental\tEngineering\t0\n"
    "Engineering, Geological\tEngineering\t0\n"
    "Engineering, Industrial\tEngineering\t0\n"
    "Engineering, Manufacturing\tEngineering\t0\n"
    "Engineering, Marine\tEngineering\t0\n"
    "Engineering, Mechanical\tEngineering\t0\n"
    "Engineering, Multidisciplinary\tEngineering\t1\n"
    "Engineering, Ocean\tEngineering\t0\n"
    "Engineering, Petroleum\tEngineering\t0\n"
    "Imaging Science & Photographic Technology\tEngineering\t0\n"
    "Instruments & Instrumentation\tEngineering\t0\n"
    "Materials Science, Biomaterials\tEngineering\t0\n"
    "Materials Science, Ceramics\tEngineering\t0\n"
    "Materials Science, Characterization & Testing\tEngineering\t0\n"
    "Materials Science, Coatings & Films\tEngineering\t0\n"
    "Materials Science, Composites\tEngineering\t0\n"
    "Materials Science, Multidisciplinary\tEngineering\t1\n"
    "Materials Science, Paper & Wood\tEngineering\t0\n"
    "Materials Science, Textiles\tEngineering\t0\n"
    "Mathematical & Computational Biology\tEngineering\t0\n"
    "Medical Laboratory Technology\tEngineering\t0\n"
    "Metallurgy & Metallurgical Engineering\tEngineering\t0\n"
    "Mining & Mineral Processing\tEngineering\t0\n"
    "Nanoscience & Nanotechnology\tEngineering\t0\n"
    "Neuroimaging\tEngineering\t0\n"
    "Nuclear Science & Technology\tEngineering\t0\n"
    "Operations Research & Management Science\tEngineering\t0\n"
    "Remote Sensing\tEngineering\t0\n"
    "Robotics\tEngineering\t0\n"
    "Telecommunications\tEngineering\t0\n"
    "Transportation\tEngineering\t0\n"
    "Transportation Science & Technology\tEngineering\t0\n"
    "Environmental Sciences\tGeosciences\t0\n"
    "Environmental Studies\tGeosciences\t0\n"
    "Geochemistry & Geophysics\tGeosciences\t0\n"
    "Geography, Physical\tGeosciences\t0\n"
    "Geology\tGeosciences\t0\n"
    "Geosciences, Multidisciplinary\tGeosciences\t1\n"
    "Limnology\tGeosciences\t0\n"
    "Marine & Freshwater Biology\tGeosciences\t0\n"
    "Meteorology & Atmospheric Sciences\tGeosciences\t0\n"
    "Mineralogy\tGeosciences\t0\n"
    "Oceanography\tGeosciences\t0\n"
    "Soil Science\tGeosciences\t0\n"
    "Water Resources\tGeosciences\t0\n"
    "Archaeology\tHumanities\t0\n"
    "Architecture\tHumanities\t0\n"
    "Art\tHumanities\t0\n"
    "Asian Studies\tHumanities\t0\n"
    "Classics\tHumanities\t0\n"
    "Cultural Studies\tHumanities\t0\n"
    "Dance\tHumanities\t0\n"
    "Ethics\tHumanities\t0\n"
    "Ethnic Studies\tHumanities\t0\n"
    "Film, Radio, Television\tHumanities\t0\n"
    "Folklore\tHumanities\t0\n"
    "History\tHumanities\t0\n"
    "History & Philosophy Of Science\tHumanities\t0\n"
    "History Of Social Sciences\tHumanities\t0\n"
    "Humanities, Multidisciplinary\tHumanities\t1\n"
    "Language & Linguistics\tHumanities\t0\n"
    "Literary Reviews\tHumanities\t0\n"
    "Literary Theory & Criticism\tHumanities\t0\n"
    "Literature\tHumanities\t0\n"
    "Literature, African, Australian, Canadian\tHumanities\t0\n"
    "Literature, American\tHumanities\t0\n"
    "Literature, British Isles\tHumanities\t0\n"
    "Literature, German, Dutch, Scandinavian\tHumanities\t0\n"
    "Literature, Romance\tHumanities\t0\n"
    "Literature, Slavic\tHumanities\t0\n"
    "Logic\tHumanities\t0\n"
    "Medical Ethics\tHumanities\t0\n"
    "Medieval & Renaissance Studies\tHumanities\t0\n"
    "Music\tHumanities\t0\n"
    "Philosophy\tHumanities\t0\n"
    "Poetry\tHumanities\t0\n"
    "Religion\tHumanities\t0\n"
    "Theater\tHumanities\t0\n"
    "Women's Studies\tHumanities\t0\n"
    "Mathematics\tMathematical sciences\t0\n"
    "Mathematics, Applied\tMathematical sciences\t0\n"
    "Mathematics, Interdisciplinary Applications\tMathematical sciences\t0\n"
    "Statistics & Probability\tMathematical sciences\t0\n"
    "Allergy\tMedical sciences\t0\n"
    "Andrology\tMedical sciences\t0\n"
    "Anesthesiology\tMedical sciences\t0\n"
    "Audiology & Speech-Language Pathology\tMedical sciences\t0\n"
    "Cardiac & Cardiovascular Systems\tMedical sciences\t0\n"
    "Clinical Neurology\tMedical sciences\t0\n"
    "Critical Care Medicine\tMedical sciences\t0\n"
    "Dentistry, Oral Surgery & Medicine\tMedical sciences\t0\n"
    "Dermatology\tMedical sciences\t0\n"
    "Emergency Medicine\tMedical sciences\t0\n"
    "Endocrinology & Metabolism\tMedical sciences\t0\n"
    "Gastroenterology & Hepatology\tMedical sciences\t0\n"
    "Geriatrics & Gerontology\tMedical sciences\t0\n"
    "Health Policy & Services\tMedical sciences\t0\n"
    "Hematology\tMedical sciences\t0\n"
    "Immunology\tMedical sciences\t0\n"
    "Infectious Diseases\tMedical sciences\t0\n"
    "Integrative & Complementary Medicine\tMedical sciences\t0\n"
    "Medicine, General & Internal\tMedical sciences\t0\n"
    "Medicine, Research & Experimental\tMedical sciences\t0\n"
    "Microscopy\tMedical sciences\t0\n"
    "Neurosciences\tMedical sciences\t0\n"
    "Nursing\tMedical sciences\t0\n"
    "Obstetrics & Gynecology\tMedical sciences\t0\n"
    "Oncology\tMedical sciences\t0\n"
    "Ophthalmology\tMedical sciences\t0\n"
    "Orthopedics\tMedical sciences\t0\n"
    "Otorhinolaryngology\tMedical sciences\t0\n"
    "Pathology\tMedical sciences\t0\n"
    "Pediatrics\tMedical sciences\t0\n"
    "Peripheral Vascular Disease\tMedical sciences\t0\n"
    "Pharmacology & Pharmacy\tMedical sciences\t0\n"
    "Psychiatry\tMedical sciences\t0\n"
    "Public, Environmental & Occupational Health\tMedical sciences\t0\n"
    "Radiology, Nuclear Medicine & Medical Imaging\tMedical sciences\t0\n"
    "Rehabilitation\tMedical sciences\t0\n"
    "Respiratory System\tMedical sciences\t0\n"
    "Rheumatology\tMedical sciences\t0\n"
    "Sport Sciences\tMedical sciences\t0\n"
    "Substance Abuse\tMedical sciences\t0\n"
    "Surgery\tMedical sciences\t0\n"
    "Toxicology\tMedical sciences\t0\n"
    "Transplantation\tMedical sciences\t0\n"
    "Tropical Medicine\tMedical sciences\t0\n"
    "Urology & Nephrology\tMedical sciences\t0\n"
    "Veterinary Sciences\tMedical sciences\t0\n"
    "Acoustics\tPhysics\t0\n"
    "Mechanics\tPhysics\t0\n"
    "Optics\tPhysics\t0\n"
    "Physics, Applied\tPhysics\t0\n"
    "Physics, Atomic, Molecular & Chemical\tPhysics\t0\n"
    "Physics, Condensed Matter\tPhysics\t0\n"
    "Physics, Fluids & Plasmas\tPhysics\t0\n"
    "Physics, Mathematical\tPhysics\t0\n"
    "Physics, Multidisciplinary\tPhysics\t1\n"
    "Physics, Nuclear\tPhysics\t0\n"
    "Physics, Particles & Fields\tPhysics\t0\n"
    "Thermodynamics\tPhysics\t0\n"
    "Business\tProfessional fields\t0\n"
    "Business, Finance\tProfessional fields\t0\n"
    "Communication\tProfessional fields\t0\n"
    "Education & Educational Research\tProfessional fields\t0\n"
    "Education, Scientific Disciplines\tProfessional fields\t0\n"
    "Education, Special\tProfessional fields\t0\n"
    "Ergonomics\tProfessional fields\t0\n"
    "Family Studies\tProfessional fields\t0\n"
    "Health Care Sciences & Services\tProfessional fields\t0\n"
    "Hospitality, Leisure, Sport & Tourism\tProfessional fields\t0\n"
    "Industrial Relations & Labor\tProfessional fields\t0\n"
    "Information Science & Library Science\tProfessional fields\t0\n"
    "Law\tProfessional fields\t0\n"
    "Management\tProfessional fields\t0\n"
    "Medicine, Legal\tProfessional fields\t0\n"
    "Primary Health Care\tProfessional fields\t0\n"
    "Social Work\tProfessional fields\t0\n"
    "Behavioral Sciences\tPsychology\t0\n"
    "Psychology\tPsychology\t0\n"
    "Psychology, Applied\tPsychology\t0\n"
    "Psychology, Biological\tPsychology\t0\n"
    "Psychology, Clinical\tPsychology\t0\n"
    "Psychology, Developmental\tPsychology\t0\n"
    "Psychology, Educational\tPsychology\t0\n"
    "Psychology, Experimental\tPsychology\t0\n"
    "Psychology, Mathematical\tPsychology\t0\n"
    "Psychology, Multidisciplinary\tPsychology\t1\n"
    "Psychology, Psychoanalysis\tPsychology\t0\n"
    "Psychology, Social\tPsychology\t0\n"
    "Agricultural Economics & Policy\tSocial sciences\t0\n"
    "Anthropology\tSocial sciences\t0\n"
    "Area Studies\tSocial sciences\t0\n"
    "Criminology & Penology\tSocial sciences\t0\n"
    "Demography\tSocial sciences\t0\n"
    "Economics\tSocial sciences\t0\n"
    "Geography\tSocial sciences\t0\n"
    "Gerontology\tSocial sciences\t0\n"
    "International Relations\tSocial sciences\t0\n"
    "Linguistics\tSocial sciences\t0\n"
    "Planning & Development\tSocial sciences\t0\n"
    "Political Science\tSocial sciences\t0\n"
    "Public Administration\tSocial sciences\t0\n"
    "Social Issues\tSocial sciences\t0\n"
    "Social Sciences, Biomedical\tSocial sciences\t0\n"
    "Social Sciences, Interdisciplinary\tSocial sciences\t0\n"
    "Social Sciences, Mathematical Methods\tSocial sciences\t0\n"
    "Sociology\tSocial sciences\t0\n"
    "Urban Studies\tSocial sciences\t0\n"
    "Multidisciplinary Sciences\t\t1\n";

}  // namespace refclass
