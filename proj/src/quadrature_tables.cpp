// Generated by tools/gen_quadrature_tables.py. Do not edit.

#include "quadrature_tables.hpp"

namespace mwx::detail {

static constexpr double kRule1d1[] = {
    5.00000000000000000e-01, 1.00000000000000000e+00,
};

static constexpr double kRule1d2[] = {
    2.11324865405187134e-01, 5.00000000000000000e-01,
    7.88675134594812866e-01, 5.00000000000000000e-01,
};

static constexpr double kRule1d3[] = {
    2.11324865405187134e-01, 5.00000000000000000e-01,
    7.88675134594812866e-01, 5.00000000000000000e-01,
};

static constexpr double kRule1d4[] = {
    1.12701665379258298e-01, 2.77777777777777901e-01,
    5.00000000000000000e-01, 4.44444444444444142e-01,
    8.87298334620741702e-01, 2.77777777777777901e-01,
};

static constexpr double kRule1d5[] = {
    1.12701665379258298e-01, 2.77777777777777901e-01,
    5.00000000000000000e-01, 4.44444444444444142e-01,
    8.87298334620741702e-01, 2.77777777777777901e-01,
};

static constexpr double kRule1d6[] = {
    6.94318442029737137e-02, 1.73927422568726897e-01,
    3.30009478207571871e-01, 3.26072577431273103e-01,
    6.69990521792428129e-01, 3.26072577431273103e-01,
    9.30568155797026231e-01, 1.73927422568726897e-01,
};

static constexpr double kRule1d7[] = {
    6.94318442029737137e-02, 1.73927422568726897e-01,
    3.30009478207571871e-01, 3.26072577431273103e-01,
    6.69990521792428129e-01, 3.26072577431273103e-01,
    9.30568155797026231e-01, 1.73927422568726897e-01,
};

static constexpr double kRule1d8[] = {
    4.69100770306680181e-02, 1.18463442528094487e-01,
    2.30765344947158446e-01, 2.39314335249683263e-01,
    5.00000000000000000e-01, 2.84444444444444500e-01,
    7.69234655052841498e-01, 2.39314335249683263e-01,
    9.53089922969331926e-01, 1.18463442528094487e-01,
};

static constexpr double kRule2d1[] = {
    3.33333333333333315e-01, 3.33333333333333370e-01, 5.00000000000000000e-01,
};

static constexpr double kRule2d2[] = {
    1.78558728263616434e-01, 1.55051025721682167e-01, 1.59020690871988585e-01,
    6.66390246014701426e-01, 1.55051025721682167e-01, 1.59020690871988585e-01,
    7.50311102226081106e-02, 6.44948974278317877e-01, 9.09793091280114152e-02,
    2.80019915499074012e-01, 6.44948974278317877e-01, 9.09793091280114152e-02,
};

static constexpr double kRule2d3[] = {
    1.78558728263616434e-01, 1.55051025721682167e-01, 1.59020690871988585e-01,
    6.66390246014701426e-01, 1.55051025721682167e-01, 1.59020690871988585e-01,
    7.50311102226081106e-02, 6.44948974278317877e-01, 9.09793091280114152e-02,
    2.80019915499074012e-01, 6.44948974278317877e-01, 9.09793091280114152e-02,
};

static constexpr double kRule2d4[] = {
    1.02717654809626260e-01, 8.85879595127039288e-02, 5.58144204830443580e-02,
    4.55706020243648036e-01, 8.85879595127039288e-02, 8.93030727728708756e-02,
    8.08694385677669825e-01, 8.85879595127039288e-02, 5.58144204830443580e-02,
    6.65540678391644963e-02, 4.09466864440734768e-01, 6.36780850998850817e-02,
    2.95266567779632616e-01, 4.09466864440734768e-01, 1.01884936159816017e-01,
    5.23979067720100722e-01, 4.09466864440734768e-01, 6.36780850998850817e-02,
    2.39311322870806205e-02, 7.87659461760847002e-01, 1.93963833059595005e-02,
    1.06170269119576499e-01, 7.87659461760847002e-01, 3.10342132895351681e-02,
    1.88409405952072367e-01, 7.87659461760847002e-01, 1.93963833059595005e-02,
};

static constexpr double kRule2d5[] = {
    1.02717654809626260e-01, 8.85879595127039288e-02, 5.58144204830443580e-02,
    4.55706020243648036e-01, 8.85879595127039288e-02, 8.93030727728708756e-02,
    8.08694385677669825e-01, 8.85879595127039288e-02, 5.58144204830443580e-02,
    6.65540678391644963e-02, 4.09466864440734768e-01, 6.36780850998850817e-02,
    2.95266567779632616e-01, 4.09466864440734768e-01, 1.01884936159816017e-01,
    5.23979067720100722e-01, 4.09466864440734768e-01, 6.36780850998850817e-02,
    2.39311322870806205e-02, 7.87659461760847002e-01, 1.93963833059595005e-02,
    1.06170269119576499e-01, 7.87659461760847002e-01, 3.10342132895351681e-02,
    1.88409405952072367e-01, 7.87659461760847002e-01, 1.93963833059595005e-02,
};

static constexpr double kRule2d6[] = {
    6.54669945550144516e-02, 5.71041961145177246e-02, 2.35683681933823996e-02,
    3.11164552244357018e-01, 5.71041961145177246e-02, 4.41850885223618595e-02,
    6.31731251641125202e-01, 5.71041961145177246e-02, 4.41850885223618595e-02,
    8.77428809330467741e-01, 5.71041961145177246e-02, 2.35683681933823996e-02,
    5.02101232113697782e-02, 2.76843013638123803e-01, 3.53880678980858926e-02,
    2.38648659731442919e-01, 2.76843013638123803e-01, 6.63442161070496583e-02,
    4.84508326630433250e-01, 2.76843013638123803e-01, 6.63442161070496583e-02,
    6.72946863150506336e-01, 2.76843013638123803e-01, 3.53880678980858926e-02,
    2.89120842243890119e-02, 5.83590432368916834e-01, 2.25840492823699071e-02,
    1.37419104134574366e-01, 5.83590432368916834e-01, 4.23397245217462595e-02,
    2.78990463496508800e-01, 5.83590432368916834e-01, 4.23397245217462595e-02,
    3.87497483406694154e-01, 5.83590432368916834e-01, 2.25840492823699071e-02,
    9.70378512694610937e-03, 8.60240135656219485e-01, 5.42322591052525355e-03,
    4.61220799064520348e-02, 8.60240135656219485e-01, 1.01672595644787880e-02,
    9.36377844373284807e-02, 8.60240135656219485e-01, 1.01672595644787880e-02,
    1.30056079216834403e-01, 8.60240135656219485e-01, 5.42322591052525355e-03,
};

static constexpr double kRule2d7[] = {
    6.54669945550144516e-02, 5.71041961145177246e-02, 2.35683681933823996e-02,
    3.11164552244357018e-01, 5.71041961145177246e-02, 4.41850885223618595e-02,
    6.31731251641125202e-01, 5.71041961145177246e-02, 4.41850885223618595e-02,
    8.77428809330467741e-01, 5.71041961145177246e-02, 2.35683681933823996e-02,
    5.02101232113697782e-02, 2.76843013638123803e-01, 3.53880678980858926e-02,
    2.38648659731442919e-01, 2.76843013638123803e-01, 6.63442161070496583e-02,
    4.84508326630433250e-01, 2.76843013638123803e-01, 6.63442161070496583e-02,
    6.72946863150506336e-01, 2.76843013638123803e-01, 3.53880678980858926e-02,
    2.89120842243890119e-02, 5.83590432368916834e-01, 2.25840492823699071e-02,
    1.37419104134574366e-01, 5.83590432368916834e-01, 4.23397245217462595e-02,
    2.78990463496508800e-01, 5.83590432368916834e-01, 4.23397245217462595e-02,
    3.87497483406694154e-01, 5.83590432368916834e-01, 2.25840492823699071e-02,
    9.70378512694610937e-03, 8.60240135656219485e-01, 5.42322591052525355e-03,
    4.61220799064520348e-02, 8.60240135656219485e-01, 1.01672595644787880e-02,
    9.36377844373284807e-02, 8.60240135656219485e-01, 1.01672595644787880e-02,
    1.30056079216834403e-01, 8.60240135656219485e-01, 5.42322591052525355e-03,
};

static constexpr double kRule2d8[] = {
    4.50425935698037377e-02, 3.98098570514687222e-02, 1.14650803515925180e-02,
    2.21578609552379208e-01, 3.98098570514687222e-02, 2.31612219294983421e-02,
    4.80095071474265667e-01, 3.98098570514687222e-02, 2.75289856644697593e-02,
    7.38611533396152042e-01, 3.98098570514687222e-02, 2.31612219294983421e-02,
    9.15147549378727554e-01, 3.98098570514687222e-02, 1.14650803515925180e-02,
    3.76212523451112044e-02, 1.98013417873608211e-01, 1.98040831320473593e-02,
    1.85070710267389443e-01, 1.98013417873608211e-01, 4.00072873861604603e-02,
    4.00993291063195922e-01, 1.98013417873608211e-01, 4.75518970579540540e-02,
    6.16915871859002318e-01, 1.98013417873608211e-01, 4.00072873861604603e-02,
    7.64365329781280578e-01, 1.98013417873608211e-01, 1.98040831320473593e-02,
    2.63646449444709247e-02, 4.37974810247386159e-01, 1.73415064313656962e-02,
    1.29695936782254106e-01, 4.37974810247386159e-01, 3.50325045033717322e-02,
    2.81012594876306920e-01, 4.37974810247386159e-01, 4.16389652151949868e-02,
    4.32329252970359679e-01, 4.37974810247386159e-01, 3.50325045033717322e-02,
    5.35660544808142847e-01, 4.37974810247386159e-01, 1.73415064313656962e-02,
    1.42857943955713874e-02, 6.95464273353636142e-01, 8.75549918216382908e-03,
    7.02762920082817127e-02, 6.95464273353636142e-01, 1.76874521104834689e-02,
    1.52267863323181929e-01, 6.95464273353636142e-01, 2.10229674873220820e-02,
    2.34259434638082131e-01, 6.95464273353636142e-01, 1.76874521104834689e-02,
    2.90249932250792431e-01, 6.95464273353636142e-01, 8.75549918216382908e-03,
    4.62228846504642975e-03, 9.01464914201173584e-01, 1.86555216687784024e-03,
    2.27384830637640326e-02, 9.01464914201173584e-01, 3.76870169532762637e-03,
    4.92675428994132081e-02, 9.01464914201173584e-01, 4.47940679728136594e-03,
    7.57966027350623767e-02, 9.01464914201173584e-01, 3.76870169532762637e-03,
    9.39127973337799821e-02, 9.01464914201173584e-01, 1.86555216687784024e-03,
};

static constexpr double kRule3d1[] = {
    2.50000000000000000e-01, 2.50000000000000000e-01, 2.50000000000000000e-01, 1.66666666666666657e-01,
};

static constexpr double kRule3d2[] = {
    1.56682637336818281e-01, 1.36054976802845978e-01, 1.22514822655441502e-01, 3.69798563588529319e-02,
    5.84747563204894183e-01, 1.36054976802845978e-01, 1.22514822655441502e-01, 3.69798563588529319e-02,
    6.58386870600443930e-02, 5.65933165072800781e-01, 1.22514822655441502e-01, 2.11570064545240702e-02,
    2.45713325211713240e-01, 5.65933165072800781e-01, 1.22514822655441502e-01, 2.11570064545240702e-02,
    8.13956670146702560e-02, 7.06797241593968978e-02, 5.44151844011225294e-01, 1.60270405984765975e-02,
    3.03772764814707552e-01, 7.06797241593968978e-02, 5.44151844011225294e-01, 1.60270405984765975e-02,
    3.42027932367664073e-02, 2.93998800631622870e-01, 5.44151844011225294e-01, 9.16942992147973431e-03,
    1.27646562120385415e-01, 2.93998800631622870e-01, 5.44151844011225294e-01, 9.16942992147973431e-03,
};

static constexpr double kRule3d3[] = {
    1.56682637336818281e-01, 1.36054976802845978e-01, 1.22514822655441502e-01, 3.69798563588529319e-02,
    5.84747563204894183e-01, 1.36054976802845978e-01, 1.22514822655441502e-01, 3.69798563588529319e-02,
    6.58386870600443930e-02, 5.65933165072800781e-01, 1.22514822655441502e-01, 2.11570064545240702e-02,
    2.45713325211713240e-01, 5.65933165072800781e-01, 1.22514822655441502e-01, 2.11570064545240702e-02,
    8.13956670146702560e-02, 7.06797241593968978e-02, 5.44151844011225294e-01, 1.60270405984765975e-02,
    3.03772764814707552e-01, 7.06797241593968978e-02, 5.44151844011225294e-01, 1.60270405984765975e-02,
    3.42027932367664073e-02, 2.93998800631622870e-01, 5.44151844011225294e-01, 9.16942992147973431e-03,
    1.27646562120385415e-01, 2.93998800631622870e-01, 5.44151844011225294e-01, 9.16942992147973431e-03,
};

static constexpr double kRule3d4[] = {
    9.52198798417149134e-02, 8.21215678634424073e-02, 7.29940240731496992e-02, 8.77047492965105265e-03,
    4.22442204031703961e-01, 8.21215678634424073e-02, 7.29940240731496992e-02, 1.40327598874416693e-02,
    7.49664528221692938e-01, 8.21215678634424073e-02, 7.29940240731496992e-02, 8.77047492965105265e-03,
    6.16960186091464816e-02, 3.79578230280590623e-01, 7.29940240731496992e-02, 1.00061425721761094e-02,
    2.73713872823129811e-01, 3.79578230280590623e-01, 7.29940240731496992e-02, 1.60098281154817564e-02,
    4.85731727037113148e-01, 3.79578230280590623e-01, 7.29940240731496992e-02, 1.00061425721761094e-02,
    2.21843026408197266e-02, 7.30165028047631615e-01, 7.29940240731496992e-02, 3.04787709051818805e-03,
    9.84204739396093570e-02, 7.30165028047631615e-01, 7.29940240731496992e-02, 4.87660334482909602e-03,
    1.74656645238398966e-01, 7.30165028047631615e-01, 7.29940240731496992e-02, 3.04787709051818805e-03,
    6.70742417520585332e-02, 5.78476039361426331e-02, 3.47003766038351813e-01, 8.16265076654669117e-03,
    2.97574315012752777e-01, 5.78476039361426331e-02, 3.47003766038351813e-01, 1.30602412264746916e-02,
    5.28074388273446993e-01, 5.78476039361426331e-02, 3.47003766038351813e-01, 8.16265076654669117e-03,
    4.34595556538024674e-02, 2.67380320411884531e-01, 3.47003766038351813e-01, 9.31268237947046121e-03,
    1.92807956774881828e-01, 2.67380320411884531e-01, 3.47003766038351813e-01, 1.49002918071527227e-02,
    3.42156357895961216e-01, 2.67380320411884531e-01, 3.47003766038351813e-01, 9.31268237947046121e-03,
    1.56269392579016508e-02, 5.14338662174091965e-01, 3.47003766038351813e-01, 2.83664869563092503e-03,
    6.93287858937781248e-02, 5.14338662174091965e-01, 3.47003766038351813e-01, 4.53863791300947519e-03,
    1.23030632529654599e-01, 5.14338662174091965e-01, 3.47003766038351813e-01, 2.83664869563092503e-03,
    3.03014811742758038e-02, 2.61332522867348364e-02, 7.05002209888498377e-01, 1.67168113148370582e-03,
    1.34432268912383385e-01, 2.61332522867348364e-02, 7.05002209888498377e-01, 2.67468981037392644e-03,
    2.38563056650490990e-01, 2.61332522867348364e-02, 7.05002209888498377e-01, 1.67168113148370582e-03,
    1.96333029354844868e-02, 1.20791820133902564e-01, 7.05002209888498377e-01, 1.90720341498178689e-03,
    8.71029849887995367e-02, 1.20791820133902564e-01, 7.05002209888498377e-01, 3.05152546397085547e-03,
    1.54572667042114559e-01, 1.20791820133902564e-01, 7.05002209888498377e-01, 1.90720341498178689e-03,
    7.05963113955478897e-03, 2.32357800579864687e-01, 7.05002209888498377e-01, 5.80935315837385956e-04,
    3.13199947658184680e-02, 2.32357800579864687e-01, 7.05002209888498377e-01, 9.29496505339816575e-04,
    5.55803583920821478e-02, 2.32357800579864687e-01, 7.05002209888498377e-01, 5.80935315837385956e-04,
};

static constexpr double kRule3d5[] = {
    9.52198798417149134e-02, 8.21215678634424073e-02, 7.29940240731496992e-02, 8.77047492965105265e-03,
    4.22442204031703961e-01, 8.21215678634424073e-02, 7.29940240731496992e-02, 1.40327598874416693e-02,
    7.49664528221692938e-01, 8.21215678634424073e-02, 7.29940240731496992e-02, 8.77047492965105265e-03,
    6.16960186091464816e-02, 3.79578230280590623e-01, 7.29940240731496992e-02, 1.00061425721761094e-02,
    2.73713872823129811e-01, 3.79578230280590623e-01, 7.29940240731496992e-02, 1.60098281154817564e-02,
    4.85731727037113148e-01, 3.79578230280590623e-01, 7.29940240731496992e-02, 1.00061425721761094e-02,
    2.21843026408197266e-02, 7.30165028047631615e-01, 7.29940240731496992e-02, 3.04787709051818805e-03,
    9.84204739396093570e-02, 7.30165028047631615e-01, 7.29940240731496992e-02, 4.87660334482909602e-03,
    1.74656645238398966e-01, 7.30165028047631615e-01, 7.29940240731496992e-02, 3.04787709051818805e-03,
    6.70742417520585332e-02, 5.78476039361426331e-02, 3.47003766038351813e-01, 8.16265076654669117e-03,
    2.97574315012752777e-01, 5.78476039361426331e-02, 3.47003766038351813e-01, 1.30602412264746916e-02,
    5.28074388273446993e-01, 5.78476039361426331e-02, 3.47003766038351813e-01, 8.16265076654669117e-03,
    4.34595556538024674e-02, 2.67380320411884531e-01, 3.47003766038351813e-01, 9.31268237947046121e-03,
    1.92807956774881828e-01, 2.67380320411884531e-01, 3.47003766038351813e-01, 1.49002918071527227e-02,
    3.42156357895961216e-01, 2.67380320411884531e-01, 3.47003766038351813e-01, 9.31268237947046121e-03,
    1.56269392579016508e-02, 5.14338662174091965e-01, 3.47003766038351813e-01, 2.83664869563092503e-03,
    6.93287858937781248e-02, 5.14338662174091965e-01, 3.47003766038351813e-01, 4.53863791300947519e-03,
    1.23030632529654599e-01, 5.14338662174091965e-01, 3.47003766038351813e-01, 2.83664869563092503e-03,
    3.03014811742758038e-02, 2.61332522867348364e-02, 7.05002209888498377e-01, 1.67168113148370582e-03,
    1.34432268912383385e-01, 2.61332522867348364e-02, 7.05002209888498377e-01, 2.67468981037392644e-03,
    2.38563056650490990e-01, 2.61332522867348364e-02, 7.05002209888498377e-01, 1.67168113148370582e-03,
    1.96333029354844868e-02, 1.20791820133902564e-01, 7.05002209888498377e-01, 1.90720341498178689e-03,
    8.71029849887995367e-02, 1.20791820133902564e-01, 7.05002209888498377e-01, 3.05152546397085547e-03,
    1.54572667042114559e-01, 1.20791820133902564e-01, 7.05002209888498377e-01, 1.90720341498178689e-03,
    7.05963113955478897e-03, 2.32357800579864687e-01, 7.05002209888498377e-01, 5.80935315837385956e-04,
    3.13199947658184680e-02, 2.32357800579864687e-01, 7.05002209888498377e-01, 9.29496505339816575e-04,
    5.55803583920821478e-02, 2.32357800579864687e-01, 7.05002209888498377e-01, 5.80935315837385956e-04,
};

static constexpr double kRule3d6[] = {
    6.22918093484526730e-02, 5.43346112272345277e-02, 4.85005494469972764e-02, 2.61345900750740686e-03,
    2.96072900492076851e-01, 5.43346112272345277e-02, 4.85005494469972764e-02, 4.89961445988875994e-03,
    6.01091938833691386e-01, 5.43346112272345277e-02, 4.85005494469972764e-02, 4.89961445988875994e-03,
    8.34873029977315495e-01, 5.43346112272345277e-02, 4.85005494469972764e-02, 2.61345900750740686e-03,
    4.77749046478169181e-02, 2.63415975366112276e-01, 4.85005494469972764e-02, 3.92412678076306445e-03,
    2.27074068609678464e-01, 2.63415975366112276e-01, 4.85005494469972764e-02, 7.35680500908294979e-03,
    4.61009406577212066e-01, 2.63415975366112276e-01, 4.85005494469972764e-02, 7.35680500908294979e-03,
    6.40308570539073529e-01, 2.63415975366112276e-01, 4.85005494469972764e-02, 3.92412678076306445e-03,
    2.75098322538482841e-02, 5.55285975747013660e-01, 4.85005494469972764e-02, 2.50430944300901286e-03,
    1.30754202079533394e-01, 5.55285975747013660e-01, 4.85005494469972764e-02, 4.69498496963440676e-03,
    2.65459272726455697e-01, 5.55285975747013660e-01, 4.85005494469972764e-02, 4.69498496963440676e-03,
    3.68703642552140776e-01, 5.55285975747013660e-01, 4.85005494469972764e-02, 2.50430944300901286e-03,
    9.23314621657362299e-03, 8.18518016420533456e-01, 4.85005494469972764e-02, 6.01372928720174415e-04,
    4.38851336893507984e-02, 8.18518016420533456e-01, 4.85005494469972764e-02, 1.12743130421366264e-03,
    8.90963004431185590e-02, 8.18518016420533456e-01, 4.85005494469972764e-02, 1.12743130421366264e-03,
    1.23748287915895733e-01, 8.18518016420533456e-01, 4.85005494469972764e-02, 6.01372928720174415e-04,
    4.98465213688842473e-02, 4.34790928042875988e-02, 2.38600737551862341e-01, 3.38108957856493716e-03,
    2.36920460578858405e-01, 4.34790928042875988e-02, 2.38600737551862341e-01, 6.33873932658919267e-03,
    4.80999709064991565e-01, 4.34790928042875988e-02, 2.38600737551862341e-01, 6.33873932658919267e-03,
    6.68073648274965737e-01, 4.34790928042875988e-02, 2.38600737551862341e-01, 3.38108957856493716e-03,
    3.82299507805670610e-02, 2.10788066397987167e-01, 2.38600737551862341e-01, 5.07672939399183253e-03,
    1.81706913503757200e-01, 2.10788066397987167e-01, 2.38600737551862341e-01, 9.51766095289489390e-03,
    3.68904282546393236e-01, 2.10788066397987167e-01, 2.38600737551862341e-01, 9.51766095289489390e-03,
    5.12381245269583285e-01, 2.10788066397987167e-01, 2.38600737551862341e-01, 5.07672939399183253e-03,
    2.20136396042882286e-02, 4.44345324777483008e-01, 2.38600737551862341e-01, 3.23988037881460435e-03,
    1.04630804534348740e-01, 4.44345324777483008e-01, 2.38600737551862341e-01, 6.07400564032184193e-03,
    2.12423133136305869e-01, 4.44345324777483008e-01, 2.38600737551862341e-01, 6.07400564032184193e-03,
    2.95040298066366391e-01, 4.44345324777483008e-01, 2.38600737551862341e-01, 3.23988037881460435e-03,
    7.38845483861197503e-03, 6.54986204816931372e-01, 2.38600737551862341e-01, 7.78009425931695700e-04,
    3.51173176233466472e-02, 6.54986204816931372e-01, 2.38600737551862341e-01, 1.45858275269461512e-03,
    7.12957400078595982e-02, 6.54986204816931372e-01, 2.38600737551862341e-01, 1.45858275269461512e-03,
    9.90246027925942712e-02, 6.54986204816931372e-01, 2.38600737551862341e-01, 7.78009425931695700e-04,
    3.16174621017318788e-02, 2.75786259743970065e-02, 5.17047295104367421e-01, 1.61758872343451703e-03,
    1.50277762174050589e-01, 2.75786259743970065e-02, 5.17047295104367421e-01, 3.03259438036940308e-03,
    3.05096316747184959e-01, 2.75786259743970065e-02, 5.17047295104367421e-01, 3.03259438036940308e-03,
    4.23756616819503662e-01, 2.75786259743970065e-02, 5.17047295104367421e-01, 1.61758872343451703e-03,
    2.42491148180740204e-02, 1.33702082267990380e-01, 5.17047295104367421e-01, 2.42882065938496887e-03,
    1.15256015737017783e-01, 1.33702082267990380e-01, 5.17047295104367421e-01, 4.55346144286727320e-03,
    2.33994606890624401e-01, 1.33702082267990380e-01, 5.17047295104367421e-01, 4.55346144286727320e-03,
    3.25001507809568102e-01, 1.33702082267990380e-01, 5.17047295104367421e-01, 2.42882065938496887e-03,
    1.39631692803390203e-02, 2.81846577863780090e-01, 5.17047295104367421e-01, 1.55003109035391109e-03,
    6.63669280461273020e-02, 2.81846577863780090e-01, 5.17047295104367421e-01, 2.90593987575817796e-03,
    1.34739198985725173e-01, 2.81846577863780090e-01, 5.17047295104367421e-01, 2.90593987575817796e-03,
    1.87142957751513433e-01, 2.81846577863780090e-01, 5.17047295104367421e-01, 1.55003109035391109e-03,
    4.68646927478463295e-03, 4.15455300374957093e-01, 5.17047295104367421e-01, 3.72217075256263397e-04,
    2.22747832462335156e-02, 4.15455300374957093e-01, 5.17047295104367421e-01, 6.97818545806260329e-04,
    4.52226212744419598e-02, 4.15455300374957093e-01, 5.17047295104367421e-01, 6.97818545806260329e-04,
    6.28109352458908338e-02, 4.15455300374957093e-01, 5.17047295104367421e-01, 3.72217075256263397e-04,
    1.33649941129658934e-02, 1.16577406689234078e-02, 7.95851417896772828e-01, 2.43985421620606459e-04,
    6.35238021414710335e-02, 1.16577406689234078e-02, 7.95851417896772828e-01, 4.57414673939932136e-04,
    1.28967039292832708e-01, 1.16577406689234078e-02, 7.95851417896772828e-01, 4.57414673939932136e-04,
    1.79125847321337850e-01, 1.16577406689234078e-02, 7.95851417896772828e-01, 2.43985421620606459e-04,
    1.02503254608294764e-02, 5.65171086994073549e-02, 7.95851417896772828e-01, 3.66345798555432680e-04,
    4.87197855050095982e-02, 5.65171086994073549e-02, 7.95851417896772828e-01, 6.86811297504770989e-04,
    9.89116878988102050e-02, 5.65171086994073549e-02, 7.95851417896772828e-01, 6.86811297504770989e-04,
    1.37381147942990334e-01, 5.65171086994073549e-02, 7.95851417896772828e-01, 3.66345798555432680e-04,
    5.90236100005809942e-03, 1.19139159297123667e-01, 7.95851417896772828e-01, 2.33795515279107950e-04,
    2.80539152629690793e-02, 1.19139159297123667e-01, 7.95851417896772828e-01, 4.38311021534327475e-04,
    5.69555075431344288e-02, 1.19139159297123667e-01, 7.95851417896772828e-01, 4.38311021534327475e-04,
    7.91070618060454034e-02, 1.19139159297123667e-01, 7.95851417896772828e-01, 2.33795515279107950e-04,
    1.98101397470043256e-03, 1.75616803962505008e-01, 7.95851417896772828e-01, 5.61425402669511164e-05,
    9.41575721655392786e-03, 1.75616803962505008e-01, 7.95851417896772828e-01, 1.05253918778391669e-04,
    1.91160209241682394e-02, 1.75616803962505008e-01, 7.95851417896772828e-01, 1.05253918778391669e-04,
    2.65507641660217356e-02, 1.75616803962505008e-01, 7.95851417896772828e-01, 5.61425402669511164e-05,
};

static constexpr double kRule3d7[] = {
    6.22918093484526730e-02, 5.43346112272345277e-02, 4.85005494469972764e-02, 2.61345900750740686e-03,
    2.96072900492076851e-01, 5.43346112272345277e-02, 4.85005494469972764e-02, 4.89961445988875994e-03,
    6.01091938833691386e-01, 5.43346112272345277e-02, 4.85005494469972764e-02, 4.89961445988875994e-03,
    8.34873029977315495e-01, 5.43346112272345277e-02, 4.85005494469972764e-02, 2.61345900750740686e-03,
    4.77749046478169181e-02, 2.63415975366112276e-01, 4.85005494469972764e-02, 3.92412678076306445e-03,
    2.27074068609678464e-01, 2.63415975366112276e-01, 4.85005494469972764e-02, 7.35680500908294979e-03,
    4.61009406577212066e-01, 2.63415975366112276e-01, 4.85005494469972764e-02, 7.35680500908294979e-03,
    6.40308570539073529e-01, 2.63415975366112276e-01, 4.85005494469972764e-02, 3.92412678076306445e-03,
    2.75098322538482841e-02, 5.55285975747013660e-01, 4.85005494469972764e-02, 2.50430944300901286e-03,
    1.30754202079533394e-01, 5.55285975747013660e-01, 4.85005494469972764e-02, 4.69498496963440676e-03,
    2.65459272726455697e-01, 5.55285975747013660e-01, 4.85005494469972764e-02, 4.69498496963440676e-03,
    3.68703642552140776e-01, 5.55285975747013660e-01, 4.85005494469972764e-02, 2.50430944300901286e-03,
    9.23314621657362299e-03, 8.18518016420533456e-01, 4.85005494469972764e-02, 6.01372928720174415e-04,
    4.38851336893507984e-02, 8.18518016420533456e-01, 4.85005494469972764e-02, 1.12743130421366264e-03,
    8.90963004431185590e-02, 8.18518016420533456e-01, 4.85005494469972764e-02, 1.12743130421366264e-03,
    1.23748287915895733e-01, 8.18518016420533456e-01, 4.85005494469972764e-02, 6.01372928720174415e-04,
    4.98465213688842473e-02, 4.34790928042875988e-02, 2.38600737551862341e-01, 3.38108957856493716e-03,
    2.36920460578858405e-01, 4.34790928042875988e-02, 2.38600737551862341e-01, 6.33873932658919267e-03,
    4.80999709064991565e-01, 4.34790928042875988e-02, 2.38600737551862341e-01, 6.33873932658919267e-03,
    6.68073648274965737e-01, 4.34790928042875988e-02, 2.38600737551862341e-01, 3.38108957856493716e-03,
    3.82299507805670610e-02, 2.10788066397987167e-01, 2.38600737551862341e-01, 5.07672939399183253e-03,
    1.81706913503757200e-01, 2.10788066397987167e-01, 2.38600737551862341e-01, 9.51766095289489390e-03,
    3.68904282546393236e-01, 2.10788066397987167e-01, 2.38600737551862341e-01, 9.51766095289489390e-03,
    5.12381245269583285e-01, 2.10788066397987167e-01, 2.38600737551862341e-01, 5.07672939399183253e-03,
    2.20136396042882286e-02, 4.44345324777483008e-01, 2.38600737551862341e-01, 3.23988037881460435e-03,
    1.04630804534348740e-01, 4.44345324777483008e-01, 2.38600737551862341e-01, 6.07400564032184193e-03,
    2.12423133136305869e-01, 4.44345324777483008e-01, 2.38600737551862341e-01, 6.07400564032184193e-03,
    2.95040298066366391e-01, 4.44345324777483008e-01, 2.38600737551862341e-01, 3.23988037881460435e-03,
    7.38845483861197503e-03, 6.54986204816931372e-01, 2.38600737551862341e-01, 7.78009425931695700e-04,
    3.51173176233466472e-02, 6.54986204816931372e-01, 2.38600737551862341e-01, 1.45858275269461512e-03,
    7.12957400078595982e-02, 6.54986204816931372e-01, 2.38600737551862341e-01, 1.45858275269461512e-03,
    9.90246027925942712e-02, 6.54986204816931372e-01, 2.38600737551862341e-01, 7.78009425931695700e-04,
    3.16174621017318788e-02, 2.75786259743970065e-02, 5.17047295104367421e-01, 1.61758872343451703e-03,
    1.50277762174050589e-01, 2.75786259743970065e-02, 5.17047295104367421e-01, 3.03259438036940308e-03,
    3.05096316747184959e-01, 2.75786259743970065e-02, 5.17047295104367421e-01, 3.03259438036940308e-03,
    4.23756616819503662e-01, 2.75786259743970065e-02, 5.17047295104367421e-01, 1.61758872343451703e-03,
    2.42491148180740204e-02, 1.33702082267990380e-01, 5.17047295104367421e-01, 2.42882065938496887e-03,
    1.15256015737017783e-01, 1.33702082267990380e-01, 5.17047295104367421e-01, 4.55346144286727320e-03,
    2.33994606890624401e-01, 1.33702082267990380e-01, 5.17047295104367421e-01, 4.55346144286727320e-03,
    3.25001507809568102e-01, 1.33702082267990380e-01, 5.17047295104367421e-01, 2.42882065938496887e-03,
    1.39631692803390203e-02, 2.81846577863780090e-01, 5.17047295104367421e-01, 1.55003109035391109e-03,
    6.63669280461273020e-02, 2.81846577863780090e-01, 5.17047295104367421e-01, 2.90593987575817796e-03,
    1.34739198985725173e-01, 2.81846577863780090e-01, 5.17047295104367421e-01, 2.90593987575817796e-03,
    1.87142957751513433e-01, 2.81846577863780090e-01, 5.17047295104367421e-01, 1.55003109035391109e-03,
    4.68646927478463295e-03, 4.15455300374957093e-01, 5.17047295104367421e-01, 3.72217075256263397e-04,
    2.22747832462335156e-02, 4.15455300374957093e-01, 5.17047295104367421e-01, 6.97818545806260329e-04,
    4.52226212744419598e-02, 4.15455300374957093e-01, 5.17047295104367421e-01, 6.97818545806260329e-04,
    6.28109352458908338e-02, 4.15455300374957093e-01, 5.17047295104367421e-01, 3.72217075256263397e-04,
    1.33649941129658934e-02, 1.16577406689234078e-02, 7.95851417896772828e-01, 2.43985421620606459e-04,
    6.35238021414710335e-02, 1.16577406689234078e-02, 7.95851417896772828e-01, 4.57414673939932136e-04,
    1.28967039292832708e-01, 1.16577406689234078e-02, 7.95851417896772828e-01, 4.57414673939932136e-04,
    1.79125847321337850e-01, 1.16577406689234078e-02, 7.95851417896772828e-01, 2.43985421620606459e-04,
    1.02503254608294764e-02, 5.65171086994073549e-02, 7.95851417896772828e-01, 3.66345798555432680e-04,
    4.87197855050095982e-02, 5.65171086994073549e-02, 7.95851417896772828e-01, 6.86811297504770989e-04,
    9.89116878988102050e-02, 5.65171086994073549e-02, 7.95851417896772828e-01, 6.86811297504770989e-04,
    1.37381147942990334e-01, 5.65171086994073549e-02, 7.95851417896772828e-01, 3.66345798555432680e-04,
    5.90236100005809942e-03, 1.19139159297123667e-01, 7.95851417896772828e-01, 2.33795515279107950e-04,
    2.80539152629690793e-02, 1.19139159297123667e-01, 7.95851417896772828e-01, 4.38311021534327475e-04,
    5.69555075431344288e-02, 1.19139159297123667e-01, 7.95851417896772828e-01, 4.38311021534327475e-04,
    7.91070618060454034e-02, 1.19139159297123667e-01, 7.95851417896772828e-01, 2.33795515279107950e-04,
    1.98101397470043256e-03, 1.75616803962505008e-01, 7.95851417896772828e-01, 5.61425402669511164e-05,
    9.41575721655392786e-03, 1.75616803962505008e-01, 7.95851417896772828e-01, 1.05253918778391669e-04,
    1.91160209241682394e-02, 1.75616803962505008e-01, 7.95851417896772828e-01, 1.05253918778391669e-04,
    2.65507641660217356e-02, 1.75616803962505008e-01, 7.95851417896772828e-01, 5.61425402669511164e-05,
};

static constexpr double kRule3d8[] = {
    4.34850684329929141e-02, 3.84332743963332543e-02, 3.45789399182150903e-02, 9.37439821766993843e-04,
    2.13916656125505866e-01, 3.84332743963332543e-02, 3.45789399182150903e-02, 1.89377231486030097e-03,
    4.63493892842725907e-01, 3.84332743963332543e-02, 3.45789399182150903e-02, 2.25090157446145240e-03,
    7.13071129559945782e-01, 3.84332743963332543e-02, 3.45789399182150903e-02, 1.89377231486030097e-03,
    8.83502717252458769e-01, 3.84332743963332543e-02, 3.45789399182150903e-02, 9.37439821766993843e-04,
    3.63203493206216005e-02, 1.91166323793956316e-01, 3.45789399182150903e-02, 1.61927658526932867e-03,
    1.78671161296432013e-01, 1.91166323793956316e-01, 3.45789399182150903e-02, 3.27118722298825769e-03,
    3.87127368143914352e-01, 1.91166323793956316e-01, 3.45789399182150903e-02, 3.88807060532280228e-03,
    5.95583574991396580e-01, 1.91166323793956316e-01, 3.45789399182150903e-02, 3.27118722298825769e-03,
    7.37934386967207034e-01, 1.91166323793956316e-01, 3.45789399182150903e-02, 1.61927658526932867e-03,
    2.54529834709709933e-02, 4.22830105598150152e-01, 3.45789399182150903e-02, 1.41792453255092685e-03,
    1.25211188776623933e-01, 4.22830105598150152e-01, 3.45789399182150903e-02, 2.86442517370849104e-03,
    2.71295477241817407e-01, 4.22830105598150152e-01, 3.45789399182150903e-02, 3.40460100870314079e-03,
    4.17379765707010797e-01, 4.22830105598150152e-01, 3.45789399182150903e-02, 2.86442517370849104e-03,
    5.17137971012663789e-01, 4.22830105598150152e-01, 3.45789399182150903e-02, 1.41792453255092685e-03,
    1.37918067694829515e-02, 6.71415856030075697e-01, 3.45789399182150903e-02, 7.15891501943870007e-04,
    6.78462123292524061e-02, 6.71415856030075697e-01, 3.45789399182150903e-02, 1.44621070637858612e-03,
    1.47002602025854634e-01, 6.71415856030075697e-01, 3.45789399182150903e-02, 1.71893840164766753e-03,
    2.26158991722456876e-01, 6.71415856030075697e-01, 3.45789399182150903e-02, 1.44621070637858612e-03,
    2.80213397282226273e-01, 6.71415856030075697e-01, 3.45789399182150903e-02, 7.15891501943870007e-04,
    4.46245462992893045e-03, 8.70293213094632367e-01, 3.45789399182150903e-02, 1.52536470498619304e-04,
    2.19522104240707852e-02, 8.70293213094632367e-01, 3.45789399182150903e-02, 3.08147081155882893e-04,
    4.75639234935763197e-02, 8.70293213094632367e-01, 3.45789399182150903e-02, 3.66257730507927302e-04,
    7.31756365630818473e-02, 8.70293213094632367e-01, 3.45789399182150903e-02, 3.08147081155882893e-04,
    9.06653923572236925e-02, 8.70293213094632367e-01, 3.45789399182150903e-02, 1.52536470498619304e-04,
    3.72285899889250663e-02, 3.29036302803045744e-02, 1.73480320771695673e-01, 1.44688123847004657e-03,
    1.83139081291086137e-01, 3.29036302803045744e-02, 1.73480320771695673e-01, 2.92292216383615308e-03,
    3.96808024473999876e-01, 3.29036302803045744e-02, 1.73480320771695673e-01, 3.47412941301362532e-03,
    6.10476967656913505e-01, 3.29036302803045744e-02, 1.73480320771695673e-01, 2.92292216383615308e-03,
    7.56387458959074666e-01, 3.29036302803045744e-02, 1.73480320771695673e-01, 1.44688123847004657e-03,
    3.10947054204484021e-02, 1.63661986623794831e-01, 1.73480320771695673e-01, 2.49925473264392189e-03,
    1.52964584084757160e-01, 1.63661986623794831e-01, 1.73480320771695673e-01, 5.04887813656486849e-03,
    3.31428846302254720e-01, 1.63661986623794831e-01, 1.73480320771695673e-01, 6.00100004508525089e-03,
    5.09893108519752225e-01, 1.63661986623794831e-01, 1.73480320771695673e-01, 5.04887813656486849e-03,
    6.31762987184060987e-01, 1.63661986623794831e-01, 1.73480320771695673e-01, 2.49925473264392189e-03,
    2.17908978824722412e-02, 3.61994799675747048e-01, 1.73480320771695673e-01, 2.18848010941898735e-03,
    1.07196244066483093e-01, 3.61994799675747048e-01, 1.73480320771695673e-01, 4.42106570107948273e-03,
    2.32262439776278612e-01, 3.61994799675747048e-01, 1.73480320771695673e-01, 5.25479418474412725e-03,
    3.57328635486074075e-01, 3.61994799675747048e-01, 1.73480320771695673e-01, 4.42106570107948273e-03,
    4.42733981670084931e-01, 3.61994799675747048e-01, 1.73480320771695673e-01, 2.18848010941898735e-03,
    1.18074902013491703e-02, 5.74814908126993096e-01, 1.73480320771695673e-01, 1.10493490770459824e-03,
    5.80847383280396409e-02, 5.74814908126993096e-01, 1.73480320771695673e-01, 2.23213809499741038e-03,
    1.25852385550655615e-01, 5.74814908126993096e-01, 1.73480320771695673e-01, 2.65307667295563467e-03,
    1.93620032773271555e-01, 5.74814908126993096e-01, 1.73480320771695673e-01, 2.23213809499741038e-03,
    2.39897280899962012e-01, 5.74814908126993096e-01, 1.73480320771695673e-01, 1.10493490770459824e-03,
    3.82041237943086609e-03, 7.45078491721124836e-01, 1.73480320771695673e-01, 2.35430746830113662e-04,
    1.87938037280004772e-02, 7.45078491721124836e-01, 1.73480320771695673e-01, 4.75606241660782476e-04,
    4.07205937535897247e-02, 7.45078491721124836e-01, 1.73480320771695673e-01, 5.65296487744315060e-04,
    6.26473837791789723e-02, 7.45078491721124836e-01, 1.73480320771695673e-01, 4.75606241660782476e-04,
    7.76207751277485786e-02, 7.45078491721124836e-01, 1.73480320771695673e-01, 2.35430746830113662e-04,
    2.74810994988123648e-02, 2.42885357160767916e-02, 3.89886387065519313e-01, 1.02268701578053702e-03,
    1.35188126023000704e-01, 2.42885357160767916e-02, 3.89886387065519313e-01, 2.06598473020027946e-03,
    2.92912538609201911e-01, 2.42885357160767916e-02, 3.89886387065519313e-01, 2.45558995953754425e-03,
    4.50636951195403146e-01, 2.42885357160767916e-02, 3.89886387065519313e-01, 2.06598473020027946e-03,
    5.58343977719591433e-01, 2.42885357160767916e-02, 3.89886387065519313e-01, 1.02268701578053702e-03,
    2.29532381913955981e-02, 1.20810681788372162e-01, 3.89886387065519313e-01, 1.76652740822439672e-03,
    1.12914159689587457e-01, 1.20810681788372162e-01, 3.89886387065519313e-01, 3.56865648488399962e-03,
    2.44651465573054255e-01, 1.20810681788372162e-01, 3.89886387065519313e-01, 4.24163688396195573e-03,
    3.76388771456520999e-01, 1.20810681788372162e-01, 3.89886387065519313e-01, 3.56865648488399962e-03,
    4.66349692954712847e-01, 1.20810681788372162e-01, 3.89886387065519313e-01, 1.76652740822439672e-03,
    1.60854287808059465e-02, 2.67214393854326382e-01, 3.89886387065519313e-01, 1.54686516950306103e-03,
    7.91292565731430558e-02, 2.67214393854326382e-01, 3.89886387065519313e-01, 3.12490504969683853e-03,
    1.71449609540077125e-01, 2.67214393854326382e-01, 3.89886387065519313e-01, 3.71420241029557334e-03,
    2.63769962507011180e-01, 2.67214393854326382e-01, 3.89886387065519313e-01, 3.12490504969683853e-03,
    3.26813790299348261e-01, 2.67214393854326382e-01, 3.89886387065519313e-01, 1.54686516950306103e-03,
    8.71595763232121436e-03, 4.24312220482640168e-01, 3.89886387065519313e-01, 7.80991938624513485e-04,
    4.28765224208113235e-02, 4.24312220482640168e-01, 3.89886387065519313e-01, 1.57772357985427880e-03,
    9.29006962259202179e-02, 4.24312220482640168e-01, 3.89886387065519313e-01, 1.87525208922537600e-03,
    1.42924870031029105e-01, 4.24312220482640168e-01, 3.89886387065519313e-01, 1.57772357985427880e-03,
    1.77085434819519189e-01, 4.24312220482640168e-01, 3.89886387065519313e-01, 7.80991938624513485e-04,
    2.82012111543485187e-03, 5.49996015736949562e-01, 3.89886387065519313e-01, 1.66407554052790037e-04,
    1.38730580546825716e-02, 5.49996015736949562e-01, 3.89886387065519313e-01, 3.36168798819304077e-04,
    3.00587985987655106e-02, 5.49996015736949562e-01, 3.89886387065519313e-01, 3.99563808494584238e-04,
    4.62445391428484426e-02, 5.49996015736949562e-01, 3.89886387065519313e-01, 3.36168798819304077e-04,
    5.72974760820961632e-02, 5.49996015736949562e-01, 3.89886387065519313e-01, 1.66407554052790037e-04,
    1.64705687743684805e-02, 1.45571321830713710e-02, 6.34333472630886797e-01, 3.67520038007325346e-04,
    8.10238806942951140e-02, 1.45571321830713710e-02, 6.34333472630886797e-01, 7.42446882427907993e-04,
    1.75554697593020920e-01, 1.45571321830713710e-02, 6.34333472630886797e-01, 8.82458172768384478e-04,
    2.70085514491746725e-01, 1.45571321830713710e-02, 6.34333472630886797e-01, 7.42446882427907993e-04,
    3.34638826411673362e-01, 1.45571321830713710e-02, 6.34333472630886797e-01, 3.67520038007325346e-04,
    1.37568327003139198e-02, 7.24068788863314050e-02, 6.34333472630886797e-01, 6.34831781565254770e-04,
    6.76741639412115764e-02, 7.24068788863314050e-02, 6.34333472630886797e-01, 1.28245763045954967e-03,
    1.46629824241390899e-01, 7.24068788863314050e-02, 6.34333472630886797e-01, 1.52430462570916155e-03,
    2.25585484541570208e-01, 7.24068788863314050e-02, 6.34333472630886797e-01, 1.28245763045954967e-03,
    2.79502815782467884e-01, 7.24068788863314050e-02, 6.34333472630886797e-01, 6.34831781565254770e-04,
    9.64066816216432865e-03, 1.60152727938307982e-01, 6.34333472630886797e-01, 5.55892406098534571e-04,
    4.74254628170508938e-02, 1.60152727938307982e-01, 6.34333472630886797e-01, 1.12298797668544865e-03,
    1.02756899715402611e-01, 1.60152727938307982e-01, 6.34333472630886797e-01, 1.33476204345558958e-03,
    1.58088336613754293e-01, 1.60152727938307982e-01, 6.34333472630886797e-01, 1.12298797668544865e-03,
    1.95873131268640865e-01, 1.60152727938307982e-01, 6.34333472630886797e-01, 5.55892406098534571e-04,
    5.22383682733772864e-03, 2.54308005746507804e-01, 6.34333472630886797e-01, 2.80662785913663132e-04,
    2.56976876550461357e-02, 2.54308005746507804e-01, 6.34333472630886797e-01, 5.66981902660167788e-04,
    5.56792608113026929e-02, 2.54308005746507804e-01, 6.34333472630886797e-01, 6.73903851785406099e-04,
    8.56608339675592467e-02, 2.54308005746507804e-01, 6.34333472630886797e-01, 5.66981902660167788e-04,
    1.06134684795267650e-01, 2.54308005746507804e-01, 6.34333472630886797e-01, 2.80662785913663132e-04,
    1.69021617151183666e-03, 3.29635544721038731e-01, 6.34333472630886797e-01, 5.98013953892924253e-05,
    8.31470213956798758e-03, 3.29635544721038731e-01, 6.34333472630886797e-01, 1.20807996789371974e-04,
    1.80154913240372395e-02, 3.29635544721038731e-01, 6.34333472630886797e-01, 1.43590075769372980e-04,
    2.77162805085064863e-02, 3.29635544721038731e-01, 6.34333472630886797e-01, 1.20807996789371974e-04,
    3.43407664765626383e-02, 3.29635544721038731e-01, 6.34333472630886797e-01, 5.98013953892924253e-05,
    6.70890455016207379e-03, 5.92951049099777611e-03, 8.51054212947016442e-01, 4.71653365059364850e-05,
    3.30032003938848587e-02, 5.92951049099777611e-03, 8.51054212947016442e-01, 9.52812185081396129e-05,
    7.15081382809928945e-02, 5.92951049099777611e-03, 8.51054212947016442e-01, 1.13249435042246869e-04,
    1.10013076168100910e-01, 5.92951049099777611e-03, 8.51054212947016442e-01, 9.52812185081396129e-05,
    1.36307372011823719e-01, 5.92951049099777611e-03, 8.51054212947016442e-01, 4.71653365059364850e-05,
    5.60352704046149144e-03, 2.94932643722358966e-02, 8.51054212947016442e-01, 8.14705363128842710e-05,
    2.75655026012310046e-02, 2.94932643722358966e-02, 8.51054212947016442e-01, 1.64582987156811756e-04,
    5.97262613403738360e-02, 2.94932643722358966e-02, 8.51054212947016442e-01, 1.95620192572180750e-04,
    9.18870200795166570e-02, 2.94932643722358966e-02, 8.51054212947016442e-01, 1.64582987156811756e-04,
    1.13848995640286166e-01, 2.94932643722358966e-02, 8.51054212947016442e-01, 8.14705363128842710e-05,
    3.92690279162668555e-03, 6.52345028216780587e-02, 8.51054212947016442e-01, 7.13399262170556645e-05,
    1.93176633816068387e-02, 6.52345028216780587e-02, 8.51054212947016442e-01, 1.44117599953649968e-04,
    4.18556421156527497e-02, 6.52345028216780587e-02, 8.51054212947016442e-01, 1.71295424533231857e-04,
    6.43936208496986573e-02, 6.52345028216780587e-02, 8.51054212947016442e-01, 1.44117599953649968e-04,
    7.97843814396788087e-02, 6.52345028216780587e-02, 8.51054212947016442e-01, 7.13399262170556645e-05,
    2.12780888992548196e-03, 1.03586473561888631e-01, 8.51054212947016442e-01, 3.60185932012982763e-05,
    1.04673576243388185e-02, 1.03586473561888631e-01, 8.51054212947016442e-01, 7.27630862707135491e-05,
    2.26796567455474600e-02, 1.03586473561888631e-01, 8.51054212947016442e-01, 8.64848134932765059e-05,
    3.48919558667560997e-02, 1.03586473561888631e-01, 8.51054212947016442e-01, 7.27630862707135491e-05,
    4.32315046011694307e-02, 1.03586473561888631e-01, 8.51054212947016442e-01, 3.60185932012982763e-05,
    6.88470393412267769e-04, 1.34269401146344086e-01, 8.51054212947016442e-01, 7.67455552179801778e-06,
    3.38680125632327082e-03, 1.34269401146344086e-01, 8.51054212947016442e-01, 1.55037800172007328e-05,
    7.33819295331973164e-03, 1.34269401146344086e-01, 8.51054212947016442e-01, 1.84274965775890715e-05,
    1.12895846503161916e-02, 1.34269401146344086e-01, 8.51054212947016442e-01, 1.55037800172007328e-05,
    1.39879155132271952e-02, 1.34269401146344086e-01, 8.51054212947016442e-01, 7.67455552179801778e-06,
};

const RawRule kRawRules[] = {
    {1, 1, 1, kRule1d1},
    {1, 2, 2, kRule1d2},
    {1, 3, 2, kRule1d3},
    {1, 4, 3, kRule1d4},
    {1, 5, 3, kRule1d5},
    {1, 6, 4, kRule1d6},
    {1, 7, 4, kRule1d7},
    {1, 8, 5, kRule1d8},
    {2, 1, 1, kRule2d1},
    {2, 2, 4, kRule2d2},
    {2, 3, 4, kRule2d3},
    {2, 4, 9, kRule2d4},
    {2, 5, 9, kRule2d5},
    {2, 6, 16, kRule2d6},
    {2, 7, 16, kRule2d7},
    {2, 8, 25, kRule2d8},
    {3, 1, 1, kRule3d1},
    {3, 2, 8, kRule3d2},
    {3, 3, 8, kRule3d3},
    {3, 4, 27, kRule3d4},
    {3, 5, 27, kRule3d5},
    {3, 6, 64, kRule3d6},
    {3, 7, 64, kRule3d7},
    {3, 8, 125, kRule3d8},
};

const int kRawRuleCount = 24;

}  // namespace mwx::detail
