window.search = Object.assign(window.search, JSON.parse('{"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}},"doc_urls":["introduction.html#introduction","introduction.html#a-taste","introduction.html#what-the-honest-numbers-look-like","finite-fields.html#finite-fields","finite-fields.html#encodings","finite-fields.html#tables","projective-space.html#projective-space","projective-space.html#enumeration-order-is-law","projective-space.html#subspaces","quadrics.html#quadrics-and-their-classification","quadrics.html#the-three-non-singular-families","quadrics.html#vertex-and-cone-structure","quadrics.html#classification-by-counting","quadrics.html#sections-tangency-nucleus","evaluation-codes.html#the-evaluation-code","evaluation-codes.html#dimension-is-measured-never-assumed","evaluation-codes.html#the-spectrum-engine","evaluation-codes.html#a-curiosity-at-q--2","pencils.html#pencils-and-two-hyperplane-scans","pencils.html#why-pencils-matter-here","pencils.html#the-scan","pencils.html#all-elliptic-pencils","tables.html#the-case-tables-and-the-census","tables.html#sizes-weights-counts","tables.html#the-census","tables.html#where-the-spectrum-says-more","tables.html#divisibility","cli.html#command-line-reference","cli.html#points","cli.html#classify","cli.html#spectrum","cli.html#verify-tables","cli.html#pencil-scan","cli.html#divisibility"],"index":{"fields":["title","body","breadcrumbs"],"pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5","index":{"body":{"root":{"docs":{},"df":0,"0":{"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"13":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"20":{"tf":1.7320508075688772},"23":{"tf":1.0},"27":{"tf":1.0},"29":{"tf":3.4641016151377544},"31":{"tf":1.0},"4":{"tf":1.0}},"df":11,",":{"docs":{},"df":0,"0":{"docs":{"9":{"tf":1.0}},"df":1},"1":{"docs":{"9":{"tf":1.0}},"df":1}}},"1":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":2.0},"20":{"tf":1.7320508075688772},"22":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.4142135623730951},"29":{"tf":2.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":2.449489742783178},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":22,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"8":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0}},"df":5}}}}}}}}}}}}}}}}},"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"q":{"docs":{"7":{"tf":1.0}},"df":1}}}},",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"0":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}},".":{"docs":{},"df":0,"1":{"docs":{"23":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"–":{"docs":{},"df":0,"(":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"1":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}},"0":{"docs":{"17":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":2.0},"23":{"tf":1.7320508075688772},"25":{"tf":1.0}},"df":5,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"32":{"tf":1.0}},"df":1}}}}},"5":{"docs":{"17":{"tf":1.0}},"df":1},"9":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{"20":{"tf":1.0}},"df":1}}}},"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,"8":{"docs":{"2":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0}},"df":3}}},"q":{"docs":{"19":{"tf":1.0}},"df":1}},"2":{"docs":{"17":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.4142135623730951},"30":{"tf":1.0}},"df":4},"3":{"docs":{},"df":0,"6":{"docs":{},"df":0,"5":{"docs":{"17":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"4":{"docs":{"14":{"tf":1.0},"17":{"tf":1.4142135623730951},"23":{"tf":1.0}},"df":3},"5":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0}},"df":5},"6":{"docs":{},"df":0,"8":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}},"8":{"docs":{"25":{"tf":1.0}},"df":1},"9":{"docs":{},"df":0,"5":{"docs":{},"df":0,"3":{"docs":{"24":{"tf":1.0}},"df":1}}}},"2":{"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"16":{"tf":2.23606797749979},"17":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"22":{"tf":2.23606797749979},"23":{"tf":1.7320508075688772},"24":{"tf":2.0},"25":{"tf":1.7320508075688772},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.7320508075688772},"32":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}},"df":21,"(":{"docs":{},"df":0,"q":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"n":{"docs":{},"df":0,"−":{"docs":{},"df":0,"5":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}},")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},"*":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"12":{"tf":1.0}},"df":1}}},",":{"docs":{},"df":0,"3":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"31":{"tf":1.0}},"df":4}},"0":{"docs":{"1":{"tf":1.0}},"df":1},"1":{"docs":{"20":{"tf":1.0}},"df":1,"0":{"docs":{"23":{"tf":1.0}},"df":1}},"2":{"docs":{"20":{"tf":1.0}},"df":1},"5":{"docs":{"20":{"tf":1.7320508075688772}},"df":1,"6":{"docs":{"27":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"7":{"docs":{"10":{"tf":1.0},"20":{"tf":1.0},"5":{"tf":1.0}},"df":3},"8":{"docs":{},"df":0,"0":{"docs":{"1":{"tf":2.0},"23":{"tf":1.0}},"df":2},"5":{"docs":{"25":{"tf":1.0}},"df":1},"8":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"21":{"tf":1.0}},"df":1}}}},"9":{"docs":{"20":{"tf":1.4142135623730951}},"df":1},"l":{"docs":{"27":{"tf":1.0}},"df":1,"+":{"docs":{},"df":0,"1":{"docs":{"27":{"tf":1.0}},"df":1},"2":{"docs":{"26":{"tf":1.0}},"df":1}}},"q":{"docs":{},"df":0,"^":{"docs":{},"df":0,"j":{"docs":{"19":{"tf":1.0}},"df":1},"{":{"docs":{},"df":0,"n":{"docs":{},"df":0,"−":{"docs":{},"df":0,"d":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}},"x":{"docs":{"4":{"tf":1.0}},"df":1},"×":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"3":{"docs":{"15":{"tf":1.4142135623730951},"2":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"29":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.0}},"df":10,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"3":{"docs":{"17":{"tf":1.0}},"df":1}}},"1":{"docs":{},"df":0,"−":{"docs":{},"df":0,"4":{"docs":{"10":{"tf":1.0}},"df":1}}},"5":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"20":{"tf":1.0}},"df":3},"9":{"docs":{},"df":0,"3":{"docs":{},"df":0,"6":{"docs":{},"df":0,"0":{"docs":{"25":{"tf":1.0}},"df":1}}}},"q":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"n":{"docs":{},"df":0,"−":{"docs":{},"df":0,"3":{"docs":{"19":{"tf":1.0}},"df":1},"4":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}},"4":{"docs":{"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"22":{"tf":1.0},"25":{"tf":1.7320508075688772},"29":{"tf":1.0},"3":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"df":11,"0":{"docs":{"14":{"tf":1.0}},"df":1},"3":{"docs":{"20":{"tf":1.0}},"df":1},"5":{"docs":{},"df":0,"5":{"docs":{"17":{"tf":1.0}},"df":1}},"7":{"docs":{"12":{"tf":1.0}},"df":1,"5":{"docs":{},"df":0,"2":{"docs":{"25":{"tf":1.0}},"df":1}}}},"5":{"docs":{"12":{"tf":1.4142135623730951},"15":{"tf":2.0},"16":{"tf":1.0},"19":{"tf":1.4142135623730951},"21":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0}},"df":8,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"5":{"docs":{"17":{"tf":1.0}},"df":1}}},"6":{"docs":{},"df":0,"0":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}},"7":{"docs":{"19":{"tf":1.0}},"df":1},"q":{"docs":{"19":{"tf":1.0}},"df":1}},"6":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.7320508075688772}},"df":4,"4":{"docs":{"16":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":2,"3":{"docs":{},"df":0,"5":{"docs":{"17":{"tf":1.0}},"df":1}}},"6":{"docs":{},"df":0,"0":{"docs":{},"df":0,"6":{"docs":{},"df":0,"6":{"docs":{"24":{"tf":1.0}},"df":1}}}},"9":{"docs":{},"df":0,"6":{"docs":{},"df":0,"0":{"docs":{"25":{"tf":1.0}},"df":1}}}},"7":{"docs":{"7":{"tf":1.0}},"df":1,"2":{"docs":{},"df":0,"8":{"docs":{"2":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}},"df":3}},"3":{"docs":{},"df":0,"5":{"docs":{"23":{"tf":1.0}},"df":1}},"9":{"docs":{},"df":0,"2":{"docs":{"25":{"tf":1.0}},"df":1}}},"8":{"docs":{"17":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}},"df":3},"9":{"docs":{"15":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0}},"df":3},"a":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{"29":{"tf":1.0}},"df":1},"1":{"docs":{"29":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"i":{"docs":{},"df":0,"j":{"docs":{"9":{"tf":1.0}},"df":1}}}},"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"20":{"tf":1.4142135623730951},"25":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"20":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}},"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"31":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"31":{"tf":1.0}},"df":6}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"2":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"9":{"docs":{},"df":0,"5":{"docs":{},"df":0,"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{"31":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"w":{"docs":{"31":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8}}}}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"15":{"tf":1.0},"27":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"24":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}},"n":{"docs":{"29":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"w":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"21":{"tf":1.0}},"df":1}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"9":{"tf":1.0}},"df":1}}}}}},"p":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"32":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0}},"df":4,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{"23":{"tf":1.0}},"df":1,"!":{"docs":{},"df":0,"(":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}}}}},"f":{"docs":{},"df":0,"4":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"v":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}}}}},"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,".":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"_":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"6":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"25":{"tf":1.0}},"df":3}}}}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"5":{"tf":1.0}},"df":1}}},"–":{"docs":{},"df":0,"k":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"z":{"docs":{"0":{"tf":1.0},"26":{"tf":1.0}},"df":2}}}}}}},"b":{"docs":{},"df":0,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,",":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}},",":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0},"32":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.4142135623730951},"16":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951}},"df":5,"k":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}},"i":{"docs":{"16":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":2,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"27":{"tf":1.0}},"df":1}}}},"e":{"docs":{"11":{"tf":1.0}},"df":1,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"20":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"27":{"tf":1.0},"5":{"tf":1.0}},"df":4}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"17":{"tf":1.0}},"df":1}}}},"t":{"docs":{"10":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0}},"df":3,"e":{"docs":{"25":{"tf":1.0}},"df":1},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"7":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"k":{"docs":{"24":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"h":{"docs":{"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":3}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"32":{"tf":1.7320508075688772}},"df":3}}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"1":{"tf":1.0},"24":{"tf":1.0},"31":{"tf":1.0}},"df":3}}}},"u":{"docs":{},"df":0,"d":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0},"31":{"tf":1.0}},"df":2}}}},"g":{"docs":{"2":{"tf":1.0}},"df":1},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0}},"df":1,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0}},"df":2}}}}}}}}},"t":{"docs":{"13":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"7":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}},"x":{"docs":{},"df":0,"₀":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951},"27":{"tf":1.0}},"df":3}}},"·":{"docs":{},"df":0,"p":{"docs":{"13":{"tf":1.0}},"df":1}}},"c":{"docs":{"4":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{"17":{"tf":1.0}},"df":1}},"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"4":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"h":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,"}":{"docs":{},"df":0,"p":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"h":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"x":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"h":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{"4":{"tf":1.0}},"df":1}}}}}}}}}}}},"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"28":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0},"8":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"19":{"tf":1.4142135623730951},"22":{"tf":2.449489742783178},"24":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":8}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"25":{"tf":1.0},"31":{"tf":1.4142135623730951}},"df":7,"s":{"docs":{"24":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"16":{"tf":1.4142135623730951}},"df":1}},"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0}},"df":4,"’":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":2}}}}}}}}},"s":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0},"21":{"tf":1.0}},"df":2}},"c":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"27":{"tf":1.0},"33":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":8}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0},"15":{"tf":2.0}},"df":2}},"s":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.7320508075688772},"16":{"tf":1.0},"20":{"tf":2.449489742783178},"21":{"tf":1.0},"22":{"tf":1.0},"29":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":8,"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951}},"df":1},"f":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0},"29":{"tf":1.0},"32":{"tf":1.0}},"df":8},"y":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"31":{"tf":1.0},"7":{"tf":1.0}},"df":7}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"9":{"tf":1.0}},"df":15,"w":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":2.0},"1":{"tf":1.4142135623730951},"16":{"tf":2.449489742783178},"2":{"tf":1.4142135623730951},"20":{"tf":2.0},"23":{"tf":1.0},"24":{"tf":1.7320508075688772},"25":{"tf":2.0},"30":{"tf":1.0}},"df":9}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"22":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":4}}}}}},"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":7}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"14":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"n":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0},"24":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}},"e":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0},"8":{"tf":1.0}},"df":7},"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"3":{"tf":1.0}},"df":2}}}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"31":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"26":{"tf":1.0},"33":{"tf":1.0},"8":{"tf":1.0}},"df":7}}}},"n":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":2.23606797749979},"12":{"tf":1.0},"13":{"tf":1.0},"22":{"tf":2.23606797749979}},"df":4,"’":{"docs":{"13":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{"27":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0},"27":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}}},"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.0},"26":{"tf":1.0}},"df":2}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"15":{"tf":1.4142135623730951}},"df":1}},"j":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":3}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"q":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0},"4":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.4142135623730951},"5":{"tf":1.0}},"df":2}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":4}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"24":{"tf":1.0}},"df":1}},"x":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"df":4}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"20":{"tf":1.0},"32":{"tf":1.0}},"df":2}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"12":{"tf":2.0},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":2.23606797749979},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"30":{"tf":1.0},"31":{"tf":1.0},"7":{"tf":1.0}},"df":16,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"}":{"docs":{},"df":0,",":{"docs":{},"df":0,"{":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"5":{"docs":{},"df":0,"2":{"docs":{},"df":0,"2":{"docs":{},"df":0,"9":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":13}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"4":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"v":{"docs":{"27":{"tf":1.4142135623730951}},"df":1}},"t":{"docs":{},"df":0,"x":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.4142135623730951},"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"18":{"tf":1.0}},"df":4}}}}}}}},".":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"x":{"docs":{"10":{"tf":1.0}},"df":1},"₁":{"docs":{},"df":0,"p":{"docs":{"4":{"tf":1.0}},"df":1},"x":{"docs":{"4":{"tf":1.0}},"df":1}},"₂":{"docs":{},"df":0,"(":{"docs":{},"df":0,"q":{"docs":{"0":{"tf":1.7320508075688772}},"df":1,"(":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"17":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0}},"df":3},"3":{"docs":{"25":{"tf":1.4142135623730951},"26":{"tf":1.0}},"df":2}}}},"⁺":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0},"16":{"tf":1.0},"25":{"tf":1.4142135623730951}},"df":3}}}}},"⁻":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"25":{"tf":1.4142135623730951}},"df":1}}}}}}}}},"d":{"docs":{"11":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{"25":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"22":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.4142135623730951}},"df":1}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"8":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"k":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"25":{"tf":1.0}},"df":3}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"32":{"tf":1.0}},"df":3}}}}}}}}}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"26":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.7320508075688772}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":9,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.4142135623730951},"24":{"tf":1.0},"6":{"tf":1.0}},"df":3}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"v":{"docs":{"2":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":5}},"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"22":{"tf":1.0}},"df":1}}}}}}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"26":{"tf":1.0},"33":{"tf":1.4142135623730951},"4":{"tf":1.0},"9":{"tf":1.0}},"df":6,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"26":{"tf":1.0}},"df":1}}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"[":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"1":{"docs":{},"df":0,"8":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{},"df":0,"7":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"6":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{},"df":0,"9":{"docs":{"33":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"o":{"docs":{},"df":0,"c":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"18":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0}},"df":3,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"3":{"tf":1.0}},"df":1}}}}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{"20":{"tf":1.0},"32":{"tf":1.0}},"df":2}},"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0}},"df":1}},"v":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"p":{"docs":{"11":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"6":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"14":{"tf":1.0},"16":{"tf":1.7320508075688772},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"29":{"tf":1.0}},"df":6}}},"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}}}},"o":{"docs":{"29":{"tf":1.0},"31":{"tf":1.0}},"df":2}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"22":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.7320508075688772},"31":{"tf":1.0}},"df":6}}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0}},"df":3}},"p":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.0},"4":{"tf":2.6457513110645907},"5":{"tf":1.0},"7":{"tf":1.0}},"df":4}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"24":{"tf":1.0}},"df":1}}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0}},"df":2}},"r":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"18":{"tf":1.4142135623730951},"2":{"tf":1.0},"24":{"tf":1.4142135623730951},"27":{"tf":1.0},"30":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":10,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"x":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":3},"t":{"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.4142135623730951},"30":{"tf":1.0},"32":{"tf":1.0}},"df":8}}},"e":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.7320508075688772},"26":{"tf":1.7320508075688772},"7":{"tf":1.0},"9":{"tf":1.0}},"df":6},"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"3":{"tf":1.0}},"df":2}},"w":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}}},"x":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"30":{"tf":1.0}},"df":4,"l":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"4":{"tf":1.0}},"df":14}}}}},"c":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1,"p":{"docs":{},"df":0,"t":{"docs":{"15":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"s":{"docs":{"25":{"tf":1.4142135623730951}},"df":1}}},"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":7}}}}},"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}},"t":{"docs":{"27":{"tf":1.0},"31":{"tf":1.4142135623730951},"33":{"tf":1.0}},"df":3}},"p":{"docs":{"5":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"23":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"27":{"tf":1.0}},"df":3}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"f":{"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":2.449489742783178},"20":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":7,"(":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1},"p":{"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951}},"df":2},"x":{"docs":{"11":{"tf":1.4142135623730951}},"df":1,"+":{"docs":{},"df":0,"i":{"docs":{"11":{"tf":1.0}},"df":1}}}},"4":{"docs":{"5":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1,"o":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"33":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"w":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}}}}}}}},"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.7320508075688772},"24":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951},"32":{"tf":1.7320508075688772},"33":{"tf":1.0}},"df":13}}}},"n":{"docs":{},"df":0,"o":{"docs":{"7":{"tf":1.0}},"df":1}},"r":{"docs":{"1":{"tf":1.0},"3":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{"5":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":2.23606797749979}},"df":1},"1":{"docs":{"8":{"tf":1.0}},"df":1},"2":{"docs":{"5":{"tf":1.0}},"df":1},"3":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}},":":{"docs":{},"df":0,":":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"d":{"docs":{"32":{"tf":1.0}},"df":1}},"w":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0}},"df":3,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":5},"3":{"docs":{"14":{"tf":1.0},"8":{"tf":1.0}},"df":2}}}}}}}}}},"l":{"docs":{},"df":0,"e":{"docs":{"29":{"tf":1.0},"4":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}}},"n":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"25":{"tf":1.0}},"df":4},"i":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0},"25":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":3}}},"x":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":7}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{"20":{"tf":1.0},"27":{"tf":1.4142135623730951}},"df":2}},"o":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}},"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"11":{"tf":1.0},"22":{"tf":1.0}},"df":2},"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"w":{"docs":{"18":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"c":{"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.4142135623730951}},"df":7},"e":{"docs":{},"df":0,"v":{"docs":{"7":{"tf":1.0}},"df":1}},"m":{"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":2.449489742783178},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":2.0},"18":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"29":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.7320508075688772},"7":{"tf":1.0},"9":{"tf":1.0}},"df":18,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"12":{"tf":1.0}},"df":1}}}}}},"/":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"a":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"24":{"tf":1.0}},"df":5}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"5":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"17":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0},"31":{"tf":1.0},"33":{"tf":1.0},"5":{"tf":1.0}},"df":8}}},"’":{"docs":{"16":{"tf":1.0}},"df":1}},"g":{"docs":{"10":{"tf":1.4142135623730951}},"df":1,"(":{"docs":{},"df":0,"x":{"docs":{},"df":0,"₀":{"docs":{},"df":0,",":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"32":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":8,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"_":{"docs":{},"df":0,"n":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"23":{"tf":1.0}},"df":2,"i":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}},"df":3},"y":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.4142135623730951}},"df":1,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"w":{"docs":{},"df":0,"(":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1},"4":{"docs":{"14":{"tf":1.0}},"df":1},"5":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"6":{"docs":{"4":{"tf":1.0}},"df":1}},"2":{"docs":{"17":{"tf":1.0},"26":{"tf":1.0}},"df":2,"5":{"docs":{"4":{"tf":1.0}},"df":1},"7":{"docs":{"4":{"tf":1.0}},"df":1}},"3":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0}},"df":2},"4":{"docs":{"4":{"tf":1.0}},"df":1},"8":{"docs":{"4":{"tf":1.0}},"df":1},"9":{"docs":{"4":{"tf":1.0}},"df":1},"q":{"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0}},"df":5,")":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0}},"df":1,"n":{"docs":{"30":{"tf":1.0},"31":{"tf":1.0}},"df":2}}}},"o":{"docs":{"8":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"4":{"tf":1.0},"7":{"tf":1.0}},"df":2}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"y":{"docs":{"16":{"tf":1.0}},"df":1,"/":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0},"31":{"tf":1.0},"7":{"tf":1.0}},"df":6}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"h":{"docs":{"3":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"18":{"tf":1.0},"27":{"tf":1.0},"7":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"9":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{"3":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"15":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{"16":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"2":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{"12":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0},"22":{"tf":2.0},"28":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":1.0}},"df":8,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"/":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"/":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"5":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}}}},"|":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"|":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":2.23606797749979},"19":{"tf":2.23606797749979},"2":{"tf":1.4142135623730951},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":2.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"31":{"tf":1.0},"32":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.7320508075688772}},"df":16}}}}}}}}},"i":{"docs":{},"df":0,".":{"docs":{"15":{"tf":1.0}},"df":1},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"27":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951}},"df":8}}}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}},"l":{"docs":{},"df":0,"u":{"docs":{},"df":0,"d":{"docs":{"15":{"tf":1.0},"24":{"tf":1.0}},"df":2},"s":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"df":2}}}},"x":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.0}},"df":4}},"i":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"c":{"docs":{"12":{"tf":1.0}},"df":1}}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"32":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"25":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"29":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"g":{"docs":{"4":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"19":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"8":{"tf":1.0}},"df":5}}}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"5":{"tf":1.4142135623730951}},"df":1}}}}},"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":8}}}}}},"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.0}},"df":4}}}}}},"j":{"docs":{"19":{"tf":1.0},"9":{"tf":1.0}},"df":2,"o":{"docs":{},"df":0,"b":{"docs":{"27":{"tf":1.4142135623730951}},"df":1},"i":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"27":{"tf":1.0}},"df":1}}}},"k":{"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.4142135623730951},"32":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":5}}}},"y":{"docs":{"27":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0},"19":{"tf":1.0}},"df":2,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"5":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"2":{"docs":{},"df":0,"9":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"4":{"docs":{},"df":0,"8":{"docs":{},"df":0,"5":{"docs":{},"df":0,"7":{"docs":{},"df":0,"5":{"docs":{"32":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"4":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"4":{"docs":{},"df":0,"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"32":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"l":{"docs":{"22":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.4142135623730951},"31":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951}},"df":5,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"g":{"docs":{"19":{"tf":1.4142135623730951}},"df":1,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"10":{"tf":1.0}},"df":1}}}},"v":{"docs":{"21":{"tf":1.0},"4":{"tf":1.0}},"df":2}},"f":{"docs":{},"df":0,"t":{"docs":{},"df":0,"m":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}},"g":{"docs":{"24":{"tf":1.0},"25":{"tf":1.0}},"df":2},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{"17":{"tf":1.0},"26":{"tf":1.0}},"df":2}}}},"s":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}},"x":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"h":{"docs":{"29":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}}}}}}}},"i":{"docs":{"18":{"tf":1.0}},"df":1,"b":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.4142135623730951},"29":{"tf":1.0},"32":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"28":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"o":{"docs":{},"df":0,"g":{"docs":{"5":{"tf":1.4142135623730951}},"df":1},"o":{"docs":{},"df":0,"k":{"docs":{"24":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"p":{"docs":{"5":{"tf":1.0}},"df":1}}},"p":{"docs":{"5":{"tf":1.0}},"df":1}}},"y":{"docs":{"13":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8}},"k":{"docs":{},"df":0,"e":{"docs":{"21":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"q":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}},"p":{"docs":{"15":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"20":{"tf":1.0}},"df":1}}},"k":{"docs":{"20":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":4}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"x":{"docs":{"20":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.4142135623730951}},"df":3}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"11":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":5}}}},"e":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"21":{"tf":1.0}},"df":2}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"18":{"tf":2.0},"19":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951}},"df":4}}}},"r":{"docs":{},"df":0,"g":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.4142135623730951}},"df":3}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0}},"df":1}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":2}}}},"u":{"docs":{"16":{"tf":1.0},"23":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"27":{"tf":1.0},"31":{"tf":1.0}},"df":2}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1,"e":{"docs":{"20":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1,"o":{"docs":{"20":{"tf":1.0},"32":{"tf":1.0}},"df":2}}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"4":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"29":{"tf":1.0},"9":{"tf":1.0}},"df":4,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"’":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"30":{"tf":1.0}},"df":4}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{"15":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":4}}}}},"t":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"5":{"tf":1.0}},"df":1}}}}}},"n":{"docs":{"12":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"18":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"27":{"tf":1.7320508075688772},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"32":{"tf":2.0},"33":{"tf":1.0},"7":{"tf":1.7320508075688772}},"df":14,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,".":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"2":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"n":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"+":{"docs":{},"df":0,"1":{"docs":{"9":{"tf":1.0}},"df":1,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}},",":{"docs":{},"df":0,"n":{"docs":{"9":{"tf":1.0}},"df":1}},"/":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1}},"=":{"docs":{},"df":0,"6":{"docs":{"19":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}},"df":4}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.7320508075688772},"26":{"tf":1.0},"33":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":14,"e":{"docs":{"20":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":4}}}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.0}},"df":3}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}},"df":7}}}}},"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"7":{"tf":1.0}},"df":1}}}},"5":{"docs":{"19":{"tf":1.0}},"df":1},"s":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{"16":{"tf":1.0}},"df":1},"n":{"docs":{"16":{"tf":1.0}},"df":1}},"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"y":{"docs":{"26":{"tf":1.0}},"df":1}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}},"d":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"df":3},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}},"n":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951}},"df":15,"c":{"docs":{"5":{"tf":1.0}},"df":1},"t":{"docs":{},"df":0,"o":{"docs":{"22":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"5":{"tf":1.0},"8":{"tf":1.0}},"df":2}},"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":3}}},"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}},"df":7}}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"12":{"tf":1.0},"32":{"tf":1.0}},"df":2}}}}}}},"u":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"17":{"tf":1.0}},"df":2,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0},"31":{"tf":1.0}},"df":2}}}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":2.23606797749979},"14":{"tf":1.0},"16":{"tf":1.7320508075688772},"18":{"tf":1.7320508075688772},"19":{"tf":1.0},"22":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951},"3":{"tf":1.0},"32":{"tf":1.0},"5":{"tf":1.0}},"df":11,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0}},"df":1}}}}}}},"p":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951}},"df":3,"^":{"docs":{},"df":0,"h":{"docs":{"3":{"tf":1.0}},"df":1}},"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"18":{"tf":1.7320508075688772},"19":{"tf":1.4142135623730951},"2":{"tf":1.7320508075688772},"20":{"tf":2.0},"22":{"tf":1.7320508075688772},"24":{"tf":2.449489742783178},"25":{"tf":1.7320508075688772},"26":{"tf":1.0},"31":{"tf":1.0},"8":{"tf":1.0}},"df":13,".":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"18":{"tf":1.0}},"df":1}}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"22":{"tf":1.7320508075688772},"27":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0},"9":{"tf":1.0}},"df":9,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"4":{"docs":{"19":{"tf":1.0}},"df":1}}}}}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.4142135623730951},"31":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}},"t":{"docs":{"12":{"tf":1.0},"4":{"tf":1.0}},"df":2,"i":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}},"s":{"docs":{},"df":0,"s":{"docs":{"27":{"tf":1.0}},"df":1}},"t":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0},"9":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":2.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":2.0},"21":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951}},"df":9}}}},"r":{"docs":{"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.7320508075688772},"4":{"tf":1.0}},"df":6,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}},"g":{"docs":{"19":{"tf":1.0},"21":{"tf":1.0}},"df":2,"(":{"docs":{},"df":0,"2":{"docs":{},"df":0,"m":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"q":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}},",":{"docs":{},"df":0,"q":{"docs":{"10":{"tf":1.0}},"df":1}}}},"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"3":{"docs":{"8":{"tf":1.0}},"df":1},"q":{"docs":{"22":{"tf":1.0}},"df":1}}},"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0}},"df":1},"q":{"docs":{"0":{"tf":1.0}},"df":1}}},"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0},"12":{"tf":1.0}},"df":2},"q":{"docs":{"0":{"tf":1.0},"24":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0}},"df":2},"q":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"df":7}},"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"q":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"|":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"q":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"k":{"docs":{"10":{"tf":1.0},"4":{"tf":1.0}},"df":2},"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"25":{"tf":1.0}},"df":1}}}},"n":{"docs":{"21":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"8":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0},"7":{"tf":1.0}},"df":2}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"u":{"docs":{"12":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0}},"df":3}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.449489742783178},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.0},"28":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"df":18}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0},"13":{"tf":1.0}},"df":2}},"y":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0},"4":{"tf":1.7320508075688772}},"df":2}}}}}},"p":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}}}}},"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0},"4":{"tf":1.0}},"df":2}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"1":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"25":{"tf":1.7320508075688772}},"df":1}}}},"s":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"v":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"27":{"tf":1.0},"4":{"tf":1.0}},"df":2},"i":{"docs":{},"df":0,"t":{"docs":{"5":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":2}}},"o":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{"15":{"tf":1.0}},"df":1}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0}},"df":4,"t":{"docs":{"1":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"27":{"tf":1.0},"8":{"tf":1.0}},"df":4}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{"16":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}},"q":{"docs":{"0":{"tf":2.6457513110645907},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":2.0},"16":{"tf":2.23606797749979},"19":{"tf":2.23606797749979},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"24":{"tf":2.23606797749979},"25":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.0},"29":{"tf":1.0},"3":{"tf":1.7320508075688772},"30":{"tf":1.0},"31":{"tf":1.7320508075688772},"32":{"tf":1.4142135623730951},"33":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"df":24,"(":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"q":{"docs":{"11":{"tf":1.0}},"df":1}}},"2":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1},"3":{"docs":{"15":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,",":{"docs":{},"df":0,"q":{"docs":{"10":{"tf":1.0},"13":{"tf":1.0}},"df":2}}}},"4":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1},"3":{"docs":{"14":{"tf":1.0},"20":{"tf":1.0}},"df":2},"q":{"docs":{"19":{"tf":1.0},"32":{"tf":1.0}},"df":2}}}},"+":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1}}}},"1":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3,")":{"docs":{},"df":0,"|":{"docs":{},"df":0,"q":{"docs":{"21":{"tf":1.0}},"df":1}},"·":{"docs":{},"df":0,"|":{"docs":{},"df":0,"q":{"docs":{"21":{"tf":1.0}},"df":1}}}}}},"=":{"docs":{},"df":0,"2":{"docs":{"10":{"tf":1.0},"19":{"tf":1.0}},"df":2},"3":{"docs":{"10":{"tf":1.0}},"df":1}},"^":{"docs":{},"df":0,"(":{"docs":{},"df":0,"l":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{"0":{"tf":1.0}},"df":1}}}},"k":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0}},"df":2},"m":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"q":{"docs":{},"df":0,"^":{"docs":{},"df":0,"{":{"docs":{},"df":0,"m":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,"}":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"q":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"2":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"2":{"docs":{"16":{"tf":1.0}},"df":1}}}}}}}}}}}},"2":{"docs":{},"df":0,"m":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1}}}},"l":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{"26":{"tf":1.4142135623730951},"33":{"tf":1.0}},"df":2}}},"m":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,"}":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"q":{"docs":{},"df":0,"^":{"docs":{},"df":0,"m":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"q":{"docs":{},"df":0,"−":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}},"−":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"7":{"tf":1.0}},"df":1}},"−":{"docs":{},"df":0,"1":{"docs":{"11":{"tf":1.0}},"df":1},"2":{"docs":{"19":{"tf":1.0}},"df":1},"d":{"docs":{"11":{"tf":1.0}},"df":1,"−":{"docs":{},"df":0,"2":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"18":{"tf":1.0}},"df":1}}}},"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}},"df":6,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0}},"df":2,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"(":{"docs":{},"df":0,"5":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"c":{"docs":{"0":{"tf":2.449489742783178},"10":{"tf":1.4142135623730951},"11":{"tf":1.7320508075688772},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":2.23606797749979},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"28":{"tf":1.4142135623730951},"29":{"tf":1.4142135623730951},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.4142135623730951},"33":{"tf":1.0}},"df":22,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"df":8,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}},"{":{"docs":{},"df":0,"b":{"docs":{},"df":0,"u":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"f":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.0}},"df":3}}}}},"{":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"df":3,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"5":{"tf":1.0}},"df":1}}}}}}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"k":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0}},"df":4}}}}}}}}}}}}}}},"{":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"7":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"y":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{},"df":0,"t":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.0}},"df":1}}}}}},"{":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"12":{"tf":1.0}},"df":1}}}}}}}},"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0}},"df":3}}}}}}}}}}}}}}}}}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"{":{"docs":{},"df":0,"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"’":{"docs":{"30":{"tf":1.0}},"df":1}}}}}},"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"|":{"docs":{},"df":0,"v":{"docs":{},"df":0,"|":{"docs":{},"df":0,")":{"docs":{},"df":0,"/":{"docs":{},"df":0,"(":{"docs":{},"df":0,"q":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"19":{"tf":1.0}},"df":1}}}}}}}}},"·":{"docs":{},"df":0,"|":{"docs":{},"df":0,"v":{"docs":{"18":{"tf":1.0},"21":{"tf":1.0}},"df":2}}},"⁺":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"q":{"docs":{"11":{"tf":1.0},"22":{"tf":1.0}},"df":2}}},"2":{"docs":{},"df":0,"d":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"q":{"docs":{"11":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"q":{"docs":{"22":{"tf":1.0}},"df":1}}}}},"m":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"q":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0}},"df":1}}},"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":3},"q":{"docs":{"19":{"tf":1.0},"32":{"tf":1.0}},"df":2}}}}},"⁻":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"q":{"docs":{"11":{"tf":1.0}},"df":1}}},"2":{"docs":{},"df":0,"m":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{},"df":0,",":{"docs":{},"df":0,"q":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"3":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"15":{"tf":1.0}},"df":1}}},"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"2":{"docs":{"20":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}},"−":{"docs":{},"df":0,"1":{"docs":{"13":{"tf":1.0},"24":{"tf":1.4142135623730951}},"df":2,")":{"docs":{},"df":0,"(":{"docs":{},"df":0,"q":{"docs":{},"df":0,"−":{"docs":{},"df":0,"2":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}},"r":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,")":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}},"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.4142135623730951},"13":{"tf":1.0}},"df":2}}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"18":{"tf":1.0}},"df":1}}},"g":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2},"k":{"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.7320508075688772},"20":{"tf":1.0},"22":{"tf":1.0}},"df":6}},"w":{"docs":{"22":{"tf":1.0}},"df":1}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"h":{"docs":{"2":{"tf":1.0}},"df":1}},"d":{"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"29":{"tf":1.0}},"df":3,"i":{"docs":{"32":{"tf":1.0}},"df":1}}},"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"g":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"24":{"tf":1.4142135623730951},"31":{"tf":1.0}},"df":3,"i":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"d":{"docs":{"21":{"tf":1.0},"25":{"tf":1.0}},"df":2}}},"u":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}},"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"11":{"tf":1.0},"8":{"tf":1.0}},"df":2,"t":{"docs":{"4":{"tf":1.0}},"df":1}}}},"f":{"docs":{},"df":0,"u":{"docs":{},"df":0,"s":{"docs":{"30":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}},"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"31":{"tf":1.0}},"df":1}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0}},"df":9}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{"6":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"4":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0},"19":{"tf":1.0},"27":{"tf":1.0}},"df":3}}}}}},"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{"4":{"tf":1.0},"5":{"tf":1.0}},"df":2}}},"t":{"docs":{"17":{"tf":1.0}},"df":1},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0}},"df":2}}}}},"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{"21":{"tf":1.0}},"df":1},"t":{"docs":{"4":{"tf":1.0}},"df":1}},"w":{"docs":{"14":{"tf":1.0},"16":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":2.0},"24":{"tf":1.7320508075688772},"31":{"tf":1.0}},"df":7,"s":{"docs":{},"df":0,".":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"(":{"docs":{},"df":0,")":{"docs":{},"df":0,".":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"(":{"docs":{},"df":0,"|":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.4142135623730951},"6":{"tf":1.0}},"df":2}},"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"31":{"tf":1.0},"4":{"tf":1.0}},"df":8}}},"s":{"docs":{"11":{"tf":1.7320508075688772},"32":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}},"df":5},"p":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"20":{"tf":2.0},"32":{"tf":2.0}},"df":3}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"18":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"e":{"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"25":{"tf":1.0}},"df":3}},"n":{"docs":{"0":{"tf":1.0},"20":{"tf":2.449489742783178},"21":{"tf":1.4142135623730951},"25":{"tf":1.0},"32":{"tf":2.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":7,"_":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}}}}}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"18":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":2.0},"22":{"tf":2.6457513110645907}},"df":4,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"13":{"tf":1.0}},"df":1}}}}}}}}}}}},"e":{"docs":{"17":{"tf":1.0}},"df":1,"d":{"docs":{"18":{"tf":1.0},"20":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951}},"df":3}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}},"q":{"docs":{},"df":0,"u":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"32":{"tf":1.0}},"df":3}}}},"t":{"docs":{"0":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"27":{"tf":1.0}},"df":1}},"r":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2},"e":{"docs":{"23":{"tf":1.0},"5":{"tf":1.0}},"df":2},"p":{"docs":{"20":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"w":{"docs":{"1":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"18":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"g":{"docs":{},"df":0,"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"7":{"tf":1.0}},"df":1}}}}}},"m":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"l":{"docs":{"12":{"tf":1.0},"20":{"tf":1.0}},"df":2},"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":2.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.7320508075688772}},"df":8}}}}}},"t":{"docs":{"2":{"tf":1.0},"5":{"tf":1.0}},"df":2,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}},"z":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.7320508075688772},"31":{"tf":1.4142135623730951}},"df":9}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0}},"df":6,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}},"df":5}}}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"13":{"tf":1.0}},"df":1}}},"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"1":{"tf":1.0}},"df":1}}}}},"r":{"docs":{},"df":0,"t":{"docs":{"22":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.7320508075688772},"20":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"32":{"tf":1.0},"8":{"tf":1.0}},"df":9}},"n":{"docs":{"13":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.4142135623730951}},"df":3}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"26":{"tf":1.0}},"df":3},"u":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"30":{"tf":1.4142135623730951},"31":{"tf":1.4142135623730951},"33":{"tf":1.0}},"df":11,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"[":{"docs":{},"df":0,"{":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"2":{"docs":{},"df":0,"8":{"docs":{},"df":0,"0":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"6":{"docs":{},"df":0,"}":{"docs":{},"df":0,",":{"docs":{},"df":0,"{":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"7":{"docs":{},"df":0,"3":{"docs":{},"df":0,"5":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"8":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"g":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"25":{"tf":1.0},"31":{"tf":1.0}},"df":2}}}}}}}}}}},"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"22":{"tf":1.0}},"df":2}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"28":{"tf":1.0}},"df":3,"_":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"1":{"tf":1.0},"18":{"tf":1.0}},"df":2}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"14":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}},"r":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"25":{"tf":1.0}},"df":2}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.4142135623730951},"32":{"tf":1.0}},"df":2}}}}}},"y":{"docs":{"23":{"tf":1.0},"25":{"tf":1.4142135623730951},"3":{"tf":1.0},"30":{"tf":1.0}},"df":4}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"29":{"tf":1.0}},"df":1}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"27":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"p":{"docs":{"1":{"tf":1.0}},"df":1},"r":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":3}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{"20":{"tf":1.0}},"df":1}}},"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{"18":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0}},"df":3}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"17":{"tf":1.0}},"df":1}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":2.449489742783178}},"df":3,"e":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"f":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"c":{"docs":{},"df":0,"h":{"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}},"df":3}},"i":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}},"df":5}},"m":{"docs":{"19":{"tf":1.0},"24":{"tf":1.0}},"df":2,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{"23":{"tf":1.4142135623730951}},"df":1}},"t":{"docs":{"23":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{},"df":0,"p":{"docs":{"12":{"tf":1.0}},"df":1}}}},"y":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"0":{"tf":1.0}},"df":1}}}}}},"t":{"docs":{"18":{"tf":1.0},"27":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.7320508075688772},"25":{"tf":1.7320508075688772},"27":{"tf":1.0},"31":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.7320508075688772},"7":{"tf":1.0}},"df":10,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"s":{"docs":{},"df":0,"(":{"docs":{},"df":0,"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"h":{"docs":{},"df":0,"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"23":{"tf":1.0}},"df":1,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"y":{"docs":{},"df":0,":":{"docs":{},"df":0,":":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"i":{"docs":{},"df":0,"l":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0}},"df":3}},"k":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}},"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"19":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0},"13":{"tf":2.0},"22":{"tf":1.0}},"df":3}}}}},"x":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"o":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"m":{"docs":{"11":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"s":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}},"df":7,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"0":{"tf":1.0}},"df":1}}}}},"x":{"docs":{},"df":0,"t":{"docs":{},"df":0,"b":{"docs":{},"df":0,"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"15":{"tf":1.0}},"df":1}}}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"m":{"docs":{"2":{"tf":1.0},"25":{"tf":1.0}},"df":2}},"i":{"docs":{"0":{"tf":1.0},"17":{"tf":1.0}},"df":2}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"20":{"tf":1.0},"23":{"tf":1.0}},"df":2}}},"o":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.4142135623730951},"25":{"tf":1.0},"8":{"tf":1.0}},"df":7}},"u":{"docs":{},"df":0,"s":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"12":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0}},"df":3}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"27":{"tf":1.7320508075688772},"5":{"tf":1.0}},"df":5}},"e":{"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0}},"df":4},"s":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":2.0},"25":{"tf":1.4142135623730951},"32":{"tf":1.4142135623730951}},"df":6}}}}}},"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"8":{"tf":1.0}},"df":8,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"24":{"tf":1.0}},"df":3}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"a":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"19":{"tf":1.0}},"df":1}}},"i":{"docs":{"12":{"tf":1.0}},"df":1,"a":{"docs":{},"df":0,"l":{"docs":{"4":{"tf":1.0}},"df":1},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}}}}}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"30":{"tf":1.0}},"df":1,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"_":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"1":{"docs":{},"df":0,"2":{"docs":{"30":{"tf":1.0}},"df":1}}}}}}}}}}}}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"df":2}}},"w":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"4":{"tf":1.0}},"df":1}}},"o":{"docs":{"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.0},"32":{"tf":1.0},"8":{"tf":1.4142135623730951}},"df":10}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.4142135623730951}},"df":1}}},"·":{"docs":{},"df":0,"f":{"docs":{"18":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"23":{"tf":1.0}},"df":1}},"n":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1,"l":{"docs":{},"df":0,"i":{"docs":{"8":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"12":{"tf":1.0},"19":{"tf":1.0}},"df":2}},"q":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0},"6":{"tf":1.0}},"df":2}},"t":{"docs":{"5":{"tf":1.0},"7":{"tf":1.0}},"df":2},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"s":{"docs":{"20":{"tf":1.0}},"df":1}}}}},"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{"30":{"tf":1.0},"31":{"tf":1.0}},"df":2}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{"24":{"tf":1.0}},"df":1}}}},"p":{"docs":{"18":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0}},"df":3,"d":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"16":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"29":{"tf":1.0},"9":{"tf":1.0}},"df":2}}}},"s":{"docs":{"1":{"tf":2.0},"12":{"tf":1.7320508075688772},"14":{"tf":2.0},"18":{"tf":2.0},"23":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"df":9,"a":{"docs":{},"df":0,"g":{"docs":{"27":{"tf":1.0}},"df":1}}}},"v":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"25":{"tf":1.0}},"df":5,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{"16":{"tf":1.0}},"df":1}},"u":{"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0}},"df":4}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{},"df":0,"h":{"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"23":{"tf":1.0}},"df":3}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"26":{"tf":1.0},"9":{"tf":1.0}},"df":2}},"n":{"docs":{},"df":0,"t":{"docs":{"11":{"tf":1.4142135623730951}},"df":1}}}}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"!":{"docs":{},"df":0,"[":{"docs":{},"df":0,"(":{"docs":{},"df":0,"6":{"docs":{"23":{"tf":1.0}},"df":1}},"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"(":{"docs":{},"df":0,"0":{"docs":{"8":{"tf":1.0}},"df":1},"1":{"docs":{"8":{"tf":1.0}},"df":1}}}}}},"<":{"docs":{},"df":0,"(":{"docs":{},"df":0,"u":{"docs":{},"df":0,"6":{"docs":{},"df":0,"4":{"docs":{"23":{"tf":1.0}},"df":1}}}}},"t":{"docs":{},"df":0,"o":{"docs":{},"df":0,"r":{"docs":{"0":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"df":8}}}},"r":{"docs":{},"df":0,"b":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{"25":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"f":{"docs":{"15":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.0},"3":{"tf":1.0}},"df":5,"i":{"docs":{"12":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"27":{"tf":1.0},"31":{"tf":1.4142135623730951},"7":{"tf":1.0}},"df":6},"y":{"docs":{},"df":0,"_":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}}}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"24":{"tf":1.0}},"df":1}}}}}}}}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.0}},"df":3}}}}},"i":{"docs":{},"df":0,"a":{"docs":{"27":{"tf":1.0}},"df":1},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"32":{"tf":1.4142135623730951}},"df":2,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"[":{"docs":{},"df":0,"]":{"docs":{},"df":0,",":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"v":{"docs":{},"df":0,"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"r":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"_":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"s":{"docs":{},"df":0,"\\"":{"docs":{},"df":0,":":{"docs":{},"df":0,"2":{"docs":{},"df":0,"5":{"docs":{"32":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}}},"s":{"docs":{"12":{"tf":1.0},"24":{"tf":1.0}},"df":2}},"w":{"docs":{"17":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"k":{"docs":{"16":{"tf":1.4142135623730951},"20":{"tf":1.0}},"df":2}},"y":{"docs":{"22":{"tf":1.0},"24":{"tf":1.0},"8":{"tf":1.0}},"df":3}},"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":2.23606797749979},"1":{"tf":1.0},"16":{"tf":1.7320508075688772},"17":{"tf":2.0},"2":{"tf":1.7320508075688772},"20":{"tf":1.7320508075688772},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"25":{"tf":2.0},"26":{"tf":2.23606797749979},"30":{"tf":1.7320508075688772},"33":{"tf":1.0}},"df":12,"_":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"25":{"tf":1.0},"31":{"tf":1.0}},"df":2}}},"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"1":{"tf":1.0}},"df":1,"(":{"docs":{},"df":0,"&":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"1":{"tf":1.0}},"df":1}}}}}}}}}}}}}}}}}}},"h":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"16":{"tf":1.0},"27":{"tf":1.0}},"df":2}}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{"19":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"20":{"tf":1.0},"25":{"tf":1.0}},"df":2}}}}},"o":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"8":{"tf":1.0}},"df":6}},"s":{"docs":{},"df":0,"e":{"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}},"df":5}}}},"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"h":{"docs":{},"df":0,"o":{"docs":{},"df":0,"u":{"docs":{},"df":0,"t":{"docs":{"20":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0}},"df":3}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"k":{"docs":{"22":{"tf":1.0},"3":{"tf":1.0}},"df":2,"e":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1}}},"r":{"docs":{},"df":0,"i":{"docs":{"15":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}},"x":{"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"4":{"tf":3.0},"5":{"tf":2.23606797749979}},"df":4,"0":{"docs":{},"df":0,"*":{"docs":{},"df":0,"x":{"docs":{},"df":0,"1":{"docs":{"12":{"tf":1.0}},"df":1}}}},"^":{"docs":{},"df":0,"h":{"docs":{"4":{"tf":1.0}},"df":1}},"_":{"docs":{},"df":0,"i":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"j":{"docs":{"14":{"tf":1.0}},"df":1}}}},"{":{"docs":{},"df":0,"2":{"docs":{},"df":0,"m":{"docs":{},"df":0,"}":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"2":{"docs":{},"df":0,"m":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"10":{"tf":1.4142135623730951}},"df":1}}}}}}}},"−":{"docs":{},"df":0,"1":{"docs":{},"df":0,"}":{"docs":{},"df":0,"x":{"docs":{},"df":0,"_":{"docs":{},"df":0,"{":{"docs":{},"df":0,"2":{"docs":{},"df":0,"m":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{"16":{"tf":1.0}},"df":1}},"²":{"docs":{},"df":0,"+":{"docs":{},"df":0,"x":{"docs":{},"df":0,"+":{"docs":{},"df":0,"1":{"docs":{"5":{"tf":1.0}},"df":1}}}}},"₀":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1},"²":{"docs":{},"df":0,"+":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1,"₀":{"docs":{},"df":0,"x":{"docs":{},"df":0,"₁":{"docs":{},"df":0,"+":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}}}}}}}},"₁":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}},"₂":{"docs":{},"df":0,"x":{"docs":{"10":{"tf":1.0}},"df":1}}},"y":{"docs":{},"df":0,"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"z":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"26":{"tf":1.0},"33":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0}},"df":6}}}}}},"breadcrumbs":{"root":{"docs":{},"df":0,"2":{"docs":{"17":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}},"df":5}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0}},"df":5}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5,"i":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":4}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0}},"df":7}}}}},"n":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"26":{"tf":1.0},"33":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0}},"df":4}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0}},"df":3}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":4}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0}},"df":3}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{"7":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0}},"df":7}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"25":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"32":{"tf":1.0}},"df":5}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":3}}}}}}},"q":{"docs":{"17":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"9":{"tf":1.4142135623730951}},"df":5}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.4142135623730951},"28":{"tf":1.0},"29":{"tf":1.0},"30":{"tf":1.0},"31":{"tf":1.0},"32":{"tf":1.0},"33":{"tf":1.0}},"df":7}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"32":{"tf":1.0}},"df":5}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0}},"df":3}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"31":{"tf":1.0},"5":{"tf":1.0}},"df":7}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"o":{"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}},"df":4}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"31":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}},"title":{"root":{"docs":{},"df":0,"2":{"docs":{"17":{"tf":1.0}},"df":1},"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"e":{"docs":{"22":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{"22":{"tf":1.0},"24":{"tf":1.0}},"df":2}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"s":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{"12":{"tf":1.0},"9":{"tf":1.0}},"df":2,"i":{"docs":{"29":{"tf":1.0}},"df":1}}}}}}},"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{"14":{"tf":1.0}},"df":1}},"m":{"docs":{},"df":0,"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{},"df":0,"d":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"e":{"docs":{"11":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"12":{"tf":1.0},"23":{"tf":1.0}},"df":2}}}},"u":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"s":{"docs":{"17":{"tf":1.0}},"df":1}}}}}},"d":{"docs":{},"df":0,"i":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"s":{"docs":{"15":{"tf":1.0}},"df":1}}}},"v":{"docs":{},"df":0,"i":{"docs":{},"df":0,"s":{"docs":{"26":{"tf":1.0},"33":{"tf":1.0}},"df":2}}}}},"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{},"df":0,"p":{"docs":{},"df":0,"t":{"docs":{"21":{"tf":1.0}},"df":1}}}}},"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{"4":{"tf":1.0}},"df":1}}},"g":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{"16":{"tf":1.0}},"df":1}}},"u":{"docs":{},"df":0,"m":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"v":{"docs":{},"df":0,"a":{"docs":{},"df":0,"l":{"docs":{},"df":0,"u":{"docs":{"14":{"tf":1.0}},"df":1}}}}},"f":{"docs":{},"df":0,"a":{"docs":{},"df":0,"m":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{},"df":0,"i":{"docs":{"10":{"tf":1.0}},"df":1}}}}},"i":{"docs":{},"df":0,"e":{"docs":{},"df":0,"l":{"docs":{},"df":0,"d":{"docs":{"3":{"tf":1.0}},"df":1}}},"n":{"docs":{},"df":0,"i":{"docs":{},"df":0,"t":{"docs":{"3":{"tf":1.0}},"df":1}}}}},"h":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"19":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"s":{"docs":{},"df":0,"t":{"docs":{"2":{"tf":1.0}},"df":1}}}}},"y":{"docs":{},"df":0,"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"p":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0}},"df":1}}}}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"d":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"0":{"tf":1.0}},"df":1}}}}}}}}},"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"w":{"docs":{"7":{"tf":1.0}},"df":1}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"e":{"docs":{"27":{"tf":1.0}},"df":1}}},"o":{"docs":{},"df":0,"o":{"docs":{},"df":0,"k":{"docs":{"2":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"a":{"docs":{},"df":0,"t":{"docs":{},"df":0,"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"19":{"tf":1.0}},"df":1}}}}},"e":{"docs":{},"df":0,"a":{"docs":{},"df":0,"s":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{"25":{"tf":1.0}},"df":1}}}},"n":{"docs":{},"df":0,"e":{"docs":{},"df":0,"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"15":{"tf":1.0}},"df":1}}}},"o":{"docs":{},"df":0,"n":{"docs":{"10":{"tf":1.0}},"df":1}},"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"l":{"docs":{},"df":0,"e":{"docs":{},"df":0,"u":{"docs":{"13":{"tf":1.0}},"df":1}}}},"m":{"docs":{},"df":0,"b":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"2":{"tf":1.0}},"df":1}}}}}},"o":{"docs":{},"df":0,"r":{"docs":{},"df":0,"d":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"7":{"tf":1.0}},"df":1}}}}},"p":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{},"df":0,"i":{"docs":{},"df":0,"l":{"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"32":{"tf":1.0}},"df":4}}}}},"o":{"docs":{},"df":0,"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"t":{"docs":{"28":{"tf":1.0}},"df":1}}}},"r":{"docs":{},"df":0,"o":{"docs":{},"df":0,"j":{"docs":{},"df":0,"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{"6":{"tf":1.0}},"df":1}}}}}}},"q":{"docs":{"17":{"tf":1.0}},"df":1,"u":{"docs":{},"df":0,"a":{"docs":{},"df":0,"d":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"c":{"docs":{"9":{"tf":1.0}},"df":1}}}}}}},"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"f":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{"27":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"c":{"docs":{},"df":0,"a":{"docs":{},"df":0,"n":{"docs":{"18":{"tf":1.0},"20":{"tf":1.0},"32":{"tf":1.0}},"df":3}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"i":{"docs":{},"df":0,"o":{"docs":{},"df":0,"n":{"docs":{"13":{"tf":1.0}},"df":1}}}}}},"i":{"docs":{},"df":0,"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"u":{"docs":{},"df":0,"l":{"docs":{},"df":0,"a":{"docs":{},"df":0,"r":{"docs":{"10":{"tf":1.0}},"df":1}}}}}},"z":{"docs":{},"df":0,"e":{"docs":{"23":{"tf":1.0}},"df":1}}},"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{},"df":0,"e":{"docs":{"6":{"tf":1.0}},"df":1}}},"e":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"m":{"docs":{"16":{"tf":1.0},"25":{"tf":1.0},"30":{"tf":1.0}},"df":3}}}}}}},"t":{"docs":{},"df":0,"r":{"docs":{},"df":0,"u":{"docs":{},"df":0,"c":{"docs":{},"df":0,"t":{"docs":{},"df":0,"u":{"docs":{},"df":0,"r":{"docs":{"11":{"tf":1.0}},"df":1}}}}}}},"u":{"docs":{},"df":0,"b":{"docs":{},"df":0,"s":{"docs":{},"df":0,"p":{"docs":{},"df":0,"a":{"docs":{},"df":0,"c":{"docs":{"8":{"tf":1.0}},"df":1}}}}}}},"t":{"docs":{},"df":0,"a":{"docs":{},"df":0,"b":{"docs":{},"df":0,"l":{"docs":{"22":{"tf":1.0},"31":{"tf":1.0},"5":{"tf":1.0}},"df":3}},"n":{"docs":{},"df":0,"g":{"docs":{},"df":0,"e":{"docs":{},"df":0,"n":{"docs":{},"df":0,"c":{"docs":{"13":{"tf":1.0}},"df":1}}}}},"s":{"docs":{},"df":0,"t":{"docs":{"1":{"tf":1.0}},"df":1}}},"h":{"docs":{},"df":0,"r":{"docs":{},"df":0,"e":{"docs":{},"df":0,"e":{"docs":{"10":{"tf":1.0}},"df":1}}}},"w":{"docs":{},"df":0,"o":{"docs":{"18":{"tf":1.0}},"df":1}}},"v":{"docs":{},"df":0,"e":{"docs":{},"df":0,"r":{"docs":{},"df":0,"i":{"docs":{},"df":0,"f":{"docs":{},"df":0,"i":{"docs":{"31":{"tf":1.0}},"df":1}}},"t":{"docs":{},"df":0,"e":{"docs":{},"df":0,"x":{"docs":{"11":{"tf":1.0}},"df":1}}}}}},"w":{"docs":{},"df":0,"e":{"docs":{},"df":0,"i":{"docs":{},"df":0,"g":{"docs":{},"df":0,"h":{"docs":{},"df":0,"t":{"docs":{"23":{"tf":1.0}},"df":1}}}}}}}}},"documentStore":{"save":true,"docs":{"0":{"body":"Take a non-singular quadric Q in the projective space PG(N,q) and list\\nits points P₁, …, Pₙ with normalized coordinates. Evaluating a\\nhomogeneous quadratic form f at those points produces a vector\\n(f(P₁), …, f(Pₙ)) over GF(q), and the set of all such vectors is a\\nlinear code: the quadratic evaluation code of Q, often written\\nC₂(Q) in the coding-theory literature. The codeword of f has small weight exactly when the quadric f = 0 meets\\nQ in many points, so the small-weight structure of C₂(Q) is a question\\nof finite geometry: which quadrics intersect Q the most? The classical\\nanswer is that the largest intersections come from quadrics that\\ndegenerate into a pair of hyperplanes, and counting hyperplane pairs\\ncase by case produces closed formulas for the smallest weights and the\\nnumber of codewords attaining them. This crate builds all of that machinery exactly — no floating point,\\nno tolerances — and then turns the classical formulas into testable\\nclaims at desk scale: exhaustive weight spectra of C₂(Q) for the quadrics of PG(4,q) and\\nPG(5,q) with q ∈ {2,3}, computed codeword by codeword; a census of all hyperplane pairs, classified into the case\\ntaxonomy and reconciled against the closed-form tables; scans over the whole form space checking that every quadric meeting Q\\nin more than a threshold number of points has a hyperplane-pair\\nmember in its pencil with Q; the divisibility of every weight by q^(l−1), a consequence of\\npoint-count congruences for polynomial systems (the Ax–Katz circle of\\nideas). Everything is deterministic: enumeration orders are fixed, parallel\\nruns shard over index ranges and merge associatively, and every report\\nis byte-identical for identical inputs regardless of thread count.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"#![allow(unused)] fn main() { extern crate quadric_codes;\\nuse quadric_codes::gf::Field;\\nuse quadric_codes::projective::GeometryContext;\\nuse quadric_codes::quadric::{standard_form, Family};\\nuse quadric_codes::code::{build_code, weight_spectrum}; let ctx = GeometryContext::new(5, Field::new(2, 1).unwrap()).unwrap();\\nlet f = standard_form(Family::Hyperbolic, &ctx).unwrap();\\nlet code = build_code(&f, &ctx).unwrap();\\nassert_eq!(code.length(), 35); // |Q+(5,2)|\\nassert_eq!(code.dimension(), 20); // measured rank, not an assumption let spectrum = weight_spectrum(&code, Some(12), 1, false).unwrap();\\nassert_eq!(spectrum.count_at(6), 280); // minimum-weight codewords } The minimum distance of C₂(Q⁺(5,2)) is 6, attained by exactly 280\\ncodewords — and those 280 are precisely the evaluations of the 280\\nproducts of tangent-hyperplane pairs through a hyperbolic\\ncodimension-2 section. The census chapter shows how far\\nthat correspondence extends, and where brute force says it stops.","breadcrumbs":"Introduction » A taste","id":"1","title":"A taste"},"10":{"body":"Every non-singular quadric of PG(N,q) is projectively one of: family space standard equation points parabolic Q(2M,q) PG(2M,q) X₀² + X₁X₂ + … + X_{2M−1}X_{2M} q^{2M−1} + … + q + 1 hyperbolic Q⁺(2M+1,q) PG(2M+1,q) X₀X₁ + … + X_{2M}X_{2M+1} (q^M+1)(q^{M+1}−1)/(q−1) elliptic Q⁻(2M+1,q) PG(2M+1,q) g(X₀,X₁) + X₂X₃ + … + X_{2M}X_{2M+1} (q^{M+1}+1)(q^M−1)/(q−1) where g is an irreducible binary quadratic. The crate picks\\ng = X₀² + bX₀X₁ + cX₁² with the smallest (b,c) encoding that is\\nirreducible — X₀²+X₀X₁+X₁² for q=2, X₀²+X₁² for q=3 — so standard\\nforms are reproducible bit for bit. Hyperbolic quadrics are the fattest, elliptic the leanest: for PG(5,2)\\nthe counts are 35, 31−4 = 27 and (for the parabolic section sizes of\\nPG(4,2)) 15.","breadcrumbs":"Quadrics and Their Classification » The three non-singular families","id":"10","title":"The three non-singular families"},"11":{"body":"Every quadric, singular or not, is a cone: an s-dimensional vertex of\\nsingular points joined to a non-singular base in a complementary\\n(N−s−1)-dimensional space, with s = −1 meaning the quadric is\\nnon-singular. The vertex is computed exactly: the radical of the polar\\nbilinear form B(x,y) = f(x+y) − f(x) − f(y), filtered by f(x) = 0 —\\nthe filter matters in characteristic 2, where the radical can contain\\nthe nucleus. Sizes of cones come from one geometric-tail helper. For a vertex of\\ndimension s over a hyperbolic base Q⁺(2d+1,q) in PG(N,q): q^{N−1} + … + q^{N−d} + 2q^{N−d−1} + q^{N−d−2} + … + q + 1, with the elliptic variant dropping the doubled middle term and the\\nparabolic variant being |PG(N−1,q)| outright. The degenerate d = 0\\ncases fold the reducible quadrics into the same formulas: a pair of\\ndistinct hyperplanes is the cone over Q⁺(1,q), a conjugate (irreducible\\nover GF(q)) pair the cone over Q⁻(1,q), and a repeated hyperplane the\\ncone over the empty Q(0,q).","breadcrumbs":"Quadrics and Their Classification » Vertex and cone structure","id":"11","title":"Vertex and cone structure"},"12":{"body":"classify computes the vertex, recognizes rank ≤ 2 forms by trying to\\nsplit their induced binary part, and otherwise decides\\nhyperbolic/elliptic/parabolic by matching the enumerated point count\\nagainst the closed-form cone sizes: #![allow(unused)] fn main() { extern crate quadric_codes;\\nuse quadric_codes::gf::{Fe, Field};\\nuse quadric_codes::projective::GeometryContext;\\nuse quadric_codes::quadric::{classify, BaseKind, QuadraticForm}; let ctx = GeometryContext::new(5, Field::new(2, 1).unwrap()).unwrap();\\n// X0*X1 vanishes on the union of two hyperplanes of PG(5,2)\\nlet mut form = QuadraticForm::zero(5);\\nform.set(0, 1, Fe::ONE);\\nlet class = classify(&form, &ctx).unwrap();\\nassert_eq!(class.base_kind, BaseKind::TwoDistinctHyperplanes);\\nassert_eq!(class.point_count, 47); // 2*16 + 15 } Counting is exact at desk scale, and the count-vs-class agreement is\\nitself a verified formula: the test suite sweeps every non-zero form\\nof PG(N,2) for N ≤ 5 (two million forms at N = 5) plus a hundred\\nthousand GF(3) samples, asserting that the enumerated count equals the\\nclosed-form size of the assigned class every single time.","breadcrumbs":"Quadrics and Their Classification » Classification by counting","id":"12","title":"Classification by counting"},"13":{"body":"A hyperplane section of a non-singular quadric is again a quadric, one\\ndimension down: either non-singular or a point-cone, in which case the\\nhyperplane is tangent at the cone’s vertex. The tangent hyperplane at\\nP has coefficient vector B·P. For even q the parabolic quadric Q(2M,q)\\nadditionally has a nucleus: the unique point spanning the radical of\\nthe (alternating) polar matrix, lying on every tangent hyperplane but\\noff the quadric. For Q(4,2) in standard form it is (1,0,0,0,0). The section machinery culminates in section_profile: classify the\\nq+1 hyperplanes through a codimension-2 subspace by section kind. For\\nthe solid X₀ = X₁ = 0 against Q⁺(5,2) — a hyperbolic Q⁺(3,2) section —\\nthe profile is 2 tangent + (q−1) parabolic, exactly the pencil\\nstructure the case tables are built from.","breadcrumbs":"Quadrics and Their Classification » Sections, tangency, nucleus","id":"13","title":"Sections, tangency, nucleus"},"14":{"body":"Fix a non-singular quadric Q = {P₁, …, Pₙ} with its points in canonical\\norder. The evaluation code collects the vectors (f(P₁), …, f(Pₙ)) over\\nall quadratic forms f. Its generator matrix has one row per monomial\\nX_iX_j — there are (N+1)(N+2)/2 of them — and one column per point,\\neach entry the monomial’s value at the (normalized) point. #![allow(unused)] fn main() { extern crate quadric_codes;\\nuse quadric_codes::gf::Field;\\nuse quadric_codes::projective::GeometryContext;\\nuse quadric_codes::quadric::{standard_form, Family};\\nuse quadric_codes::code::build_code; let ctx = GeometryContext::new(4, Field::new(3, 1).unwrap()).unwrap();\\nlet f = standard_form(Family::Parabolic, &ctx).unwrap();\\nlet code = build_code(&f, &ctx).unwrap();\\nassert_eq!(code.length(), 40); // |Q(4,3)|\\nassert_eq!(code.dimension(), 14); // C(6,2) - 1, measured as a rank }","breadcrumbs":"The Evaluation Code » The Evaluation Code","id":"14","title":"The Evaluation Code"},"15":{"body":"The textbook dimension claim is k = C(N+2,2) − 1, i.e. one less than\\nthe number of monomials: the only form vanishing identically on Q\\nshould be (a multiple of) the equation of Q itself. The crate always measures the rank and exposes the kernel of the evaluation map, and\\nthe verification suite probes the whole grid. The claim holds at every\\ntested (family, N, q) with three structural exceptions, where the\\nquadric simply has fewer points than the claimed dimension: quadric n claimed k measured rank Q(2,2) (conic) 3 5 3 Q(2,3) (conic) 4 5 4 Q⁻(3,2) 5 9 5 Those are emitted as findings, not hidden; everywhere else — including\\nthe even-q parabolic cases one might worry about — the rank equals the\\nformula.","breadcrumbs":"The Evaluation Code » Dimension is measured, never assumed","id":"15","title":"Dimension is measured, never assumed"},"16":{"body":"The weight of a codeword is its number of non-zero coordinates, and the\\nweight of f’s codeword is n minus |Q ∩ {f = 0}|. Spectra are computed\\nby enumerating all q^k coefficient vectors over a row-space basis of\\nthe generator (dimension k), never over all q^{(N+1)(N+2)/2} forms —\\nat q = 2, N = 5 that is 2²⁰ codewords instead of 2²¹ forms, and the\\nresult is correct whatever the kernel turns out to be. Two walks drive the enumeration: q = 2, n ≤ 64: rows become 64-bit masks; a Gray-code walk does\\none XOR and one popcount per codeword. The 2²⁰ − 1 spectrum of\\nC₂(Q⁺(5,2)) takes a few milliseconds. general q: a base-q odometer over the coefficient digits, where\\neach increment changes an amortized O(1) number of digits and each\\ndigit change updates the running codeword in O(n). The index space shards into contiguous ranges whose histograms merge by\\naddition, so any thread count produces the identical spectrum — a\\nproperty the acceptance suite asserts byte for byte on the serialized\\nreports. The engine is validated against a genuinely independent oracle: for the\\nsmall codes the tests enumerate the entire form space and evaluate\\neach form directly at the points, checking that every weight class is\\nhit exactly q^{m−k} times more often than in the codeword spectrum.","breadcrumbs":"The Evaluation Code » The spectrum engine","id":"16","title":"The spectrum engine"},"17":{"body":"The full spectrum of C₂(Q(4,2)) comes out as weight w: 2, 4, 6, 8, 10, 12, 14\\ncount: 105, 1365, 5005, 6435, 3003, 455, 15 — exactly the binomial coefficients C(15, w). With length 15, dimension\\n14 and every weight even (see the divisibility chapter), the code is\\nthe full even-weight subcode of GF(2)¹⁵. The general theory forces the\\neven weights; the dimension count does the rest.","breadcrumbs":"The Evaluation Code » A curiosity at q = 2","id":"17","title":"A curiosity at q = 2"},"18":{"body":"Two forms that are not proportional span a pencil: the q+1 quadrics\\nλf₁ + μf₂ up to scalar, canonically enumerated as f₁ + t·f₂ for\\nt ∈ GF(q) followed by f₂. Every member contains V = {f₁ = 0} ∩ {f₂ = 0},\\nand every point outside V lies in exactly one member. Counting both\\nsides gives the partition identity Σ over members |member| = |PG(N,q)| + q·|V|, which doubles as a cheap strong oracle for the whole form/point\\nmachinery: #![allow(unused)] fn main() { extern crate quadric_codes;\\nuse quadric_codes::gf::{Fe, Field};\\nuse quadric_codes::pencil::{make_pencil, verify_counting_identity};\\nuse quadric_codes::projective::GeometryContext;\\nuse quadric_codes::quadric::{standard_form, Family, QuadraticForm}; let ctx = GeometryContext::new(5, Field::new(2, 1).unwrap()).unwrap();\\nlet q_plus = standard_form(Family::Hyperbolic, &ctx).unwrap();\\nlet mut pair = QuadraticForm::zero(5);\\npair.set(0, 1, Fe::ONE);\\nlet pencil = make_pencil(&q_plus, &pair, ctx.field()).unwrap();\\nassert!(verify_counting_identity(&pencil, &ctx)); } The verification suite checks the identity for every pencil of\\nquadratic forms of PG(N,2) with N ≤ 4 — over half a billion pairs at\\nN = 4, enumerated through 64-bit value masks in a couple of seconds —\\nand for a thousand fixed-seed random pencils over GF(3).","breadcrumbs":"Pencils and Two-Hyperplane Scans » Pencils and Two-Hyperplane Scans","id":"18","title":"Pencils and Two-Hyperplane Scans"},"19":{"body":"If |V| is large, the pencil of Q and Q′ must contain a large quadric\\n(it contains ≥ (|PG| + q|V|)/(q+1) points on some member), and the\\nlargest quadrics of PG(N,q) are the hyperplane pairs. Chasing that\\nobservation through the geometry yields thresholds: whenever |V|\\nexceeds them, some member of the pencil is a union of two distinct\\nhyperplanes. The crate implements three: kind applies to threshold general_N N ≥ 6, and the elliptic case of N = 5 q^{N−2} + 3q^{N−3} + 3q^{N−4} + 2(q^{N−5} + … + q) + 1 hyperbolic5_corollary Q⁺(5,q) q³ + 5q² + 1 parabolic4 Q(4,q) q² + 11q + 1 The trailing 2q^j sum of the general bound runs j = N−5 down to 1 and\\nis empty at N = 5 (the tail would collide with the constant term; this\\nreading reproduces the intended value 57 at N=6, q=2). “Two hyperplanes” is interpreted strictly: repeated hyperplanes and\\nconjugate (irreducible over GF(q)) hyperplane pairs are detected and\\ntallied separately, so reports expose the borderline cases rather than\\nbury them.","breadcrumbs":"Pencils and Two-Hyperplane Scans » Why pencils matter here","id":"19","title":"Why pencils matter here"},"2":{"body":"Running the verification suite is the point of this crate. Two findings\\nrecur throughout the book, both discovered by the exhaustive oracles: The closed-form codeword counts match the hyperplane-pair census exactly, row by row, in every verified configuration. The full spectrum agrees with those counts only at the first few\\nweights. At q = 2 and q = 3 the theorem thresholds sit so close to\\nthe pair sizes that quadrics with irreducible pencils also reach\\nthe larger “small” weights: for Q⁺(5,2) the spectrum holds 11648\\ncodewords of weight 10, of which only 728 come from hyperplane\\npairs. Neither finding is a bug; both are verified by independent enumeration\\npaths and frozen in the acceptance tests.","breadcrumbs":"Introduction » What the honest numbers look like","id":"2","title":"What the honest numbers look like"},"20":{"body":"scan_theorem checks a threshold statement against the entire form\\nspace modulo the evaluation kernel. The kernel of evaluation on a\\nnon-singular quadric is spanned by the base equation itself (the scan\\nverifies this before starting), which has a pleasant consequence: the\\npencil spanned by Q and f₂ depends only on the codeword class of f₂,\\nso codeword classes are exactly the right scan universe. The scan precomputes, for every class, whether the pencil contains a\\nhyperplane pair / repeated hyperplane / conjugate pair — by marking the\\nclasses of all rank ≤ 2 forms, of which there are only a few thousand —\\nand then walks all q^k classes with the same Gray/odometer engine as\\nthe spectrum, reading |V| = n − weight off the running codeword. A\\nclass above the threshold without the pair flag would be a\\ncounterexample and is serialized in full; none exist: | scan | threshold | scanned | violations | max |V|, irreducible pencils |\\n|——|———–|———|————|——————————|\\n| Q⁻(5,2), general bound | 27 | 2²⁰ − 1 | 0 | 21 |\\n| Q⁺(5,2), corollary | 29 | 2²⁰ − 1 | 0 | 25 |\\n| Q(4,3), sampled 10⁶, seed 1 | 43 | 10⁶ | 0 | 22 | The last column is the empirical sharpness datum: the largest\\nintersection a quadric with an all-irreducible pencil achieves. For\\nQ⁺(5,2) it is 25 — comfortably below the threshold 29, confirming the\\nstatement with margin, but above n − w for the third-smallest weight\\n(35 − 10 = 25). That single number explains the spectrum findings of\\nthe census chapter: weight-10 codewords need not come from hyperplane\\npairs, and 10920 of the 11648 in fact do not. Sampled scans draw coefficient vectors from one deterministic stream\\nper sample index (seeded counter-mode generator), so the sample — and\\ntherefore the report — is identical for any thread count.","breadcrumbs":"Pencils and Two-Hyperplane Scans » The scan","id":"20","title":"The scan"},"21":{"body":"A pencil whose members are all non-singular elliptic quadrics is the\\nextreme opposite of the two-hyperplane situation, and the counting\\nidentity pins its intersection size exactly:\\n(q+1)·|Q⁻| = |PG| + q·|V| forces |V| = ((q+1)|Q⁻| − |PG|)/q. That makes\\nan exhaustive census cheap: only the irreducible classes at that one\\n|V| value need their members classified. Full elliptic scans run the\\ncensus and report the result — through Q⁻(5,2) there are exactly 28800\\nall-elliptic pencils, every one meeting the base in 9 points. The\\nscan records the observed size rather than asserting any closed form\\nfor it; at N = 5 the identity leaves no room anyway.","breadcrumbs":"Pencils and Two-Hyperplane Scans » All-elliptic pencils","id":"21","title":"All-elliptic pencils"},"22":{"body":"Fix a non-singular quadric Q and a pair of distinct hyperplanes\\nΠ₁ ≠ Π₂. The size of Q ∩ (Π₁ ∪ Π₂) is determined by inclusion-exclusion\\nfrom three sections: the two hyperplane sections and the section of the\\ncodimension-2 space Π₁ ∩ Π₂. Classifying those three sections sorts\\nevery pair into a small case table, one per family. For the hyperbolic quadric Q⁺(2l+1,q) the codimension-2 section is one\\nof: a non-singular hyperbolic quadric (case 1), a line-cone over a\\nhyperbolic base (case 2), a point-cone over a parabolic base (case 3),\\nor a non-singular elliptic quadric (case 4) — and the number of tangent\\nhyperplanes among Π₁, Π₂ splits the cases into rows (1.1)–(4.1). The\\nelliptic and parabolic tables work the same way with their own section\\ntypes; the parabolic family distinguishes hyperbolic and elliptic\\nhyperplane sections and so has eleven rows. At l = 2 some cone types degenerate into rank ≤ 2 quadrics — a\\nline-cone over Q⁺(1,q) in PG(3,q) is a pair of planes — and the\\nclassifier folds those back onto their cone family before matching\\nlabels. The raw class is preserved in the PairCase.","breadcrumbs":"The Case Tables and the Census » The Case Tables and the Census","id":"22","title":"The Case Tables and the Census"},"23":{"body":"Each row carries a closed-form size (all geometric tails expanded\\nthrough one shared summation helper), a weight\\n(|Q| minus the size), and a closed-form codeword count. Merged rows\\nstay merged exactly as printed: #![allow(unused)] fn main() { extern crate quadric_codes;\\nuse quadric_codes::quadric::Family;\\nuse quadric_codes::tables::{table_weights_counts, TableParity}; let rows = table_weights_counts(Family::Hyperbolic, 2, 2, TableParity::Even, false).unwrap();\\nlet summary: Vec<(u64, u64)> = rows.iter().map(|r| (r.weight, r.count)).collect();\\nassert_eq!( summary, vec![(6, 280), (8, 735), (10, 560), (10, 168), (12, 210), (14, 0)]\\n); } At q = 2 the third and fourth weights coincide (560 + 168 = 728 at\\nweight 10), and the (1.1) row vanishes through its (q−1)(q−2) factor.","breadcrumbs":"The Case Tables and the Census » Sizes, weights, counts","id":"23","title":"Sizes, weights, counts"},"24":{"body":"verify_family enumerates all unordered hyperplane pairs — 1953 at\\nq = 2 in PG(5,q), 66066 at q = 3 — classifies each pair, measures its\\nintersection size through precomputed incidence bitmasks, and\\nreconciles three ways: measured size per case == table size (exact, every pair); pair count per row × (q−1) == table codeword count (exact, every\\nrow, every family, q ∈ {2,3} — including the one row whose printed\\nformula looks dimensionally odd; it is correct as printed); table count per weight vs the brute-force spectrum, where the\\ncodeword space is small enough to enumerate. Legs 1 and 2 reconcile perfectly across the whole grid. They are the\\nactual combinatorial content of the case analysis, and they pin down an\\nambiguity: at q > 2 the count columns count codewords (pairs times\\nq−1 scalars), not quadrics — the q = 3 censuses sum to exactly\\n(number of pairs) × 2.","breadcrumbs":"The Case Tables and the Census » The census","id":"24","title":"The census"},"25":{"body":"Leg 3 is deliberately informational. The tables count hyperplane-pair\\ncodewords; whether all codewords of those weights come from pairs is\\na theorem only above the pencil thresholds, and at desk-scale q the\\nthresholds bite only at the first weights. The measured picture: code weights where spectrum == table first excess weight spectrum / table there C₂(Q⁺(5,2)) 6, 8 10 11648 / 728 C₂(Q⁻(5,2)) 4 (and 2 is absent, as predicted) 6 4752 / 792 C₂(Q(4,2)) 2 4 1365 / 285 C₂(Q(4,3)) 12, 15 18 39360 / 6960 The excesses are codewords of quadrics whose pencils stay irreducible;\\nthe scan chapter’s max-|V| data predicts exactly where they start. The\\nreports surface every such disagreement verbatim ( spectrum_agrees, weight_lines, findings) while the census reconciliation itself\\nstays exact. The minimum distances, for the record: 6 for C₂(Q⁺(5,2)), 4 for\\nC₂(Q⁻(5,2)), 2 for C₂(Q(4,2)), 12 for C₂(Q(4,3)) — each attained by\\nexactly the predicted number of hyperplane-pair codewords.","breadcrumbs":"The Case Tables and the Census » Where the spectrum says more","id":"25","title":"Where the spectrum says more"},"26":{"body":"Every non-zero weight in every computed spectrum is divisible by\\nq^{l−1}: point counts of pairs of quadrics in 2l+2 variables obey a\\nq^{l−1} congruence (Ax–Katz), and the weight is a difference of two\\nsuch counts. divisibility_check asserts it over the full spectra —\\nall weights of C₂(Q(4,3)) are multiples of 3, all weights over GF(2)\\nat l = 2 are even. It is this evenness that makes C₂(Q(4,2)) the whole\\neven-weight code of length 15.","breadcrumbs":"The Case Tables and the Census » Divisibility","id":"26","title":"Divisibility"},"27":{"body":"The quadric-codes binary exposes the library as reproducible batch\\njobs. Output is JSON on stdout (CSV via --format csv for the\\ntable-shaped reports), always embedding the job configuration under the config key. Identical flags produce byte-identical output, whatever --threads says. Exit codes: 0 all checks passed, 1 a verification found a mismatch, 2 usage error. Common flags: --family {hyperbolic|elliptic|parabolic} --q <order> — field order, any prime power up to 256 --n <N> or --l <L> — projective dimension, or the half-dimension\\nparameter (N = 2l+1 for hyperbolic/elliptic, 2l for parabolic) --threads <T> — worker threads, default 1 --force — override the enumeration-budget guard or the verified\\nparameter grid","breadcrumbs":"Command-Line Reference » Command-Line Reference","id":"27","title":"Command-Line Reference"},"28":{"body":"Emit the point list of the standard quadric, in canonical order. $ quadric-codes points --family hyperbolic --n 5 --q 2\\n{\\"N\\":5,\\"config\\":{...},\\"count\\":35,\\"family\\":\\"hyperbolic\\",\\"points\\":[[0,0,0,0,0,1],...],\\"q\\":2}","breadcrumbs":"Command-Line Reference » points","id":"28","title":"points"},"29":{"body":"Read form lines q N a00 a01 ... aNN (upper-triangular coefficients in\\nlexicographic monomial order) from a file ( --input) or stdin, and\\nemit the quadric class of each. $ echo \\"3 4 1 0 0 0 0 0 1 0 0 0 0 0 0 1 0\\" | quadric-codes classify\\n{\\"classes\\":[{\\"N\\":4,\\"base_kind\\":\\"parabolic\\",\\"line\\":\\"...\\",\\"point_count\\":40,\\"q\\":3,\\"vertex_dim\\":-1}],...}","breadcrumbs":"Command-Line Reference » classify","id":"29","title":"classify"},"3":{"body":"Everything downstream works over a small Galois field GF(q) with\\nq = p^h ≤ 256 and h ≤ 4 — far more than the verification grid needs\\n(q ∈ {2,3} does the heavy lifting; q up to 9 stays comfortable).","breadcrumbs":"Finite Fields » Finite Fields","id":"3","title":"Finite Fields"},"30":{"body":"Exhaustive weight spectrum of the quadric’s evaluation code. The\\nenumeration refuses more than 2³² codewords unless --force is given. --max-weight truncates the report (counting stays exact). $ quadric-codes spectrum --family hyperbolic --n 5 --q 2 --max-weight 12\\n{\\"N\\":5,...,\\"dimension\\":20,\\"n\\":35, \\"spectrum\\":[{\\"count\\":280,\\"weight\\":6},{\\"count\\":735,\\"weight\\":8}, {\\"count\\":11648,\\"weight\\":10},{\\"count\\":52290,\\"weight\\":12}], \\"truncated_at\\":12}","breadcrumbs":"Command-Line Reference » spectrum","id":"30","title":"spectrum"},"31":{"body":"Run the full hyperplane-pair census for one family at (l, q) and\\nreconcile it against the closed-form size and count tables, plus the\\nbrute-force spectrum where the budget allows. Exits 1 if any size or\\ncensus row mismatches; the spectrum comparison is reported in weight_lines/ spectrum_agrees without affecting the exit code. $ quadric-codes verify-tables --family elliptic --l 2 --q 2\\n... \\"all_match\\":true,\\"pairs_total\\":1953,\\"spectrum_agrees\\":false ...\\n$ echo $?\\n0 Parameters outside the verified grid (l = 2, q ∈ {2,3}) are rejected\\nunless --force is given.","breadcrumbs":"Command-Line Reference » verify-tables","id":"31","title":"verify-tables"},"32":{"body":"Scan the form space for violations of the two-hyperplane threshold\\nstatements. The threshold is inferred from the family and dimension:\\nthe corollary bound for Q⁺(5,q), the dimension-4 bound for Q(4,q), the\\ngeneral bound otherwise. Without --sample the scan is exhaustive over\\nall forms modulo the evaluation kernel; with --sample N --seed S it\\ndraws N deterministic samples. $ quadric-codes pencil-scan --family hyperbolic --n 5 --q 2\\n{\\"kind\\":\\"hyperbolic5_corollary\\",\\"threshold\\":29,\\"scanned\\":1048575, \\"violations\\":[],\\"max_V_irreducible_pencils\\":25,...} $ quadric-codes pencil-scan --family parabolic --n 4 --q 3 --sample 1000000 --seed 1\\n{\\"kind\\":\\"parabolic4\\",\\"threshold\\":43,\\"scanned\\":1000000,\\"violations\\":[],...} Violations, if any ever appeared, would be serialized as form lines\\nready to feed back into classify.","breadcrumbs":"Command-Line Reference » pencil-scan","id":"32","title":"pencil-scan"},"33":{"body":"Compute the full spectrum and check that every non-zero weight is\\ndivisible by q^{l−1}. Exits 1 on failure. $ quadric-codes divisibility --family parabolic --n 4 --q 3\\n{\\"divisible\\":true,\\"modulus\\":3,\\"weights\\":[12,15,18,21,24,27,30,33,36,39],...}","breadcrumbs":"Command-Line Reference » divisibility","id":"33","title":"divisibility"},"4":{"body":"An element is the integer encoding of its residue polynomial:\\nc₀ + c₁x + … + c_{h−1}x^{h−1} encodes as c₀ + c₁p + … + c_{h−1}p^{h−1}.\\nEncoding 0 is the additive identity and encoding 1 the multiplicative\\nidentity. The encoding is the only representation that ever leaves\\nthe field module, which is what makes golden files and cross-run\\ncomparisons possible. The reduction polynomial is fixed per field so encodings never drift: field polynomial GF(4) x² + x + 1 GF(8) x³ + x + 1 GF(9) x² + 1 GF(16) x⁴ + x + 1 GF(25) x² + 2 GF(27) x³ + 2x + 1 For any other prime power the construction picks the monic irreducible\\nx^h + c(x) with the smallest constant-part encoding; the table above is\\nexactly what that rule produces, so there is one rule, documented\\ntwice. Irreducibility is checked exhaustively at construction: root\\ntests for degrees 2 and 3, plus trial division by irreducible\\nquadratics for degree 4.","breadcrumbs":"Finite Fields » Encodings","id":"4","title":"Encodings"},"5":{"body":"Multiplication and inversion sit in the innermost enumeration loops, so\\nevery binary operation is a dense table lookup, built once: #![allow(unused)] fn main() { extern crate quadric_codes;\\nuse quadric_codes::gf::{Field, Fe}; let f4 = Field::new(2, 2).unwrap();\\nlet x = Fe(2); // the residue class of x\\nassert_eq!(f4.mul(x, x), Fe(3)); // x² = x + 1 mod x²+x+1\\nassert_eq!(f4.inv(x).unwrap(), Fe(3)); } Discrete-log tables over a fixed generator (the smallest primitive\\nencoding) are kept alongside the dense tables; exp and log are\\nmutually inverse bijections on the non-zero elements, and the unit\\ntests check the full field axioms exhaustively for every q ≤ 27. A Field is immutable after construction, so it is freely shared\\nacross scan threads.","breadcrumbs":"Finite Fields » Tables","id":"5","title":"Tables"},"6":{"body":"PG(N,q) is the set of one-dimensional subspaces of GF(q)^{N+1}. A point\\nis stored by the unique representative whose leftmost non-zero\\ncoordinate is 1, and hyperplanes use the same normalization on their\\ndual vectors. One rule, both sides of the duality.","breadcrumbs":"Projective Space » Projective Space","id":"6","title":"Projective Space"},"7":{"body":"Points are enumerated in lexicographic order of their coordinate\\nencodings, first coordinate most significant: #![allow(unused)] fn main() { extern crate quadric_codes;\\nuse quadric_codes::gf::Field;\\nuse quadric_codes::projective::{enumerate_points, GeometryContext}; let ctx = GeometryContext::new(2, Field::new(2, 1).unwrap()).unwrap();\\nlet points = enumerate_points(&ctx); // the Fano plane\\nassert_eq!(points.len(), 7); } This order is fixed forever: the columns of every generator matrix, the\\nclass indices of the scan bitmaps, and all golden outputs depend on it.\\n|PG(N,q)| = (q^{N+1} − 1)/(q − 1), and the unit tests verify the count,\\ndistinctness and normalization for every context in the grid. The GeometryContext bundles the dimension N, the field, and the\\nhalf-dimension parameter l (l = (N−1)/2 for odd N, N/2 for even N) that\\nindexes the closed-form tables.","breadcrumbs":"Projective Space » Enumeration order is law","id":"7","title":"Enumeration order is law"},"8":{"body":"A subspace is stored by a reduced-echelon basis of its underlying\\nvector space, so subspace equality is plain sequence equality and the\\nprojective dimension is basis.len() - 1 (−1 for the empty subspace).\\nPoint lists are materialized on demand: #![allow(unused)] fn main() { extern crate quadric_codes;\\nuse quadric_codes::gf::{Fe, Field};\\nuse quadric_codes::projective::{GeometryContext, Subspace}; let f = Field::new(3, 1).unwrap();\\nlet line = Subspace::from_vectors( &[ vec![Fe(1), Fe(0), Fe(0), Fe(0)], vec![Fe(0), Fe(1), Fe(0), Fe(0)], ], &f,\\n);\\nassert_eq!(line.proj_dim(), 1);\\nassert_eq!(line.points(&f).len(), 4); // a line of PG(3,3) } Two distinct hyperplanes intersect in a codimension-2 subspace,\\ncomputed as the kernel of their 2×(N+1) coefficient matrix; going the\\nother way, the q+1 hyperplanes through a codimension-2 subspace come\\nfrom the kernel of its basis matrix. Those two operations carry the\\nwhole hyperplane-pair analysis of the later chapters.","breadcrumbs":"Projective Space » Subspaces","id":"8","title":"Subspaces"},"9":{"body":"A quadratic form in N+1 variables is stored by its upper-triangular\\ncoefficient vector a_{ij} (i ≤ j), in the lexicographic monomial order\\n(0,0), (0,1), …, (N,N). This representation needs no division by 2\\nanywhere, so characteristic 2 is handled by the same code path as odd\\ncharacteristic — which matters, because the even-q parabolic case is\\ngenuinely different geometry (it has a nucleus).","breadcrumbs":"Quadrics and Their Classification » Quadrics and Their Classification","id":"9","title":"Quadrics and Their Classification"}},"docInfo":{"0":{"body":173,"breadcrumbs":2,"title":1},"1":{"body":75,"breadcrumbs":2,"title":1},"10":{"body":71,"breadcrumbs":6,"title":4},"11":{"body":104,"breadcrumbs":5,"title":3},"12":{"body":105,"breadcrumbs":4,"title":2},"13":{"body":80,"breadcrumbs":5,"title":3},"14":{"body":72,"breadcrumbs":4,"title":2},"15":{"body":82,"breadcrumbs":6,"title":4},"16":{"body":147,"breadcrumbs":4,"title":2},"17":{"body":50,"breadcrumbs":5,"title":3},"18":{"body":119,"breadcrumbs":8,"title":4},"19":{"body":106,"breadcrumbs":7,"title":3},"2":{"body":73,"breadcrumbs":4,"title":3},"20":{"body":182,"breadcrumbs":5,"title":1},"21":{"body":68,"breadcrumbs":6,"title":2},"22":{"body":120,"breadcrumbs":6,"title":3},"23":{"body":82,"breadcrumbs":6,"title":3},"24":{"body":104,"breadcrumbs":4,"title":1},"25":{"body":109,"breadcrumbs":5,"title":2},"26":{"body":46,"breadcrumbs":4,"title":1},"27":{"body":85,"breadcrumbs":6,"title":3},"28":{"body":16,"breadcrumbs":4,"title":1},"29":{"body":43,"breadcrumbs":4,"title":1},"3":{"body":27,"breadcrumbs":4,"title":2},"30":{"body":37,"breadcrumbs":4,"title":1},"31":{"body":62,"breadcrumbs":5,"title":2},"32":{"body":75,"breadcrumbs":5,"title":2},"33":{"body":22,"breadcrumbs":4,"title":1},"4":{"body":101,"breadcrumbs":3,"title":1},"5":{"body":77,"breadcrumbs":3,"title":1},"6":{"body":27,"breadcrumbs":4,"title":2},"7":{"body":75,"breadcrumbs":5,"title":3},"8":{"body":90,"breadcrumbs":3,"title":1},"9":{"body":39,"breadcrumbs":4,"title":2}},"length":34},"lang":"English"}}'));