"""Word lists behind the starter lexicon and the synthetic caption generator.

The shipped lexicon file (data/lexicon.tsv) is generated from these tables by
scripts/build_lexicon.py and committed; edit here and regenerate rather than
editing the TSV by hand.
"""

DETERMINERS = (
    "a", "an", "the", "this", "these", "those", "some", "any",
    "each", "every", "another", "its",
)

PREPOSITIONS = (
    "of", "in", "on", "at", "by", "with", "for", "from", "to", "into",
    "onto", "over", "under", "above", "below", "behind", "beside", "between",
    "among", "within", "without", "through", "across", "near", "upon",
    "against", "along", "around", "inside", "outside", "beneath", "atop",
    "amid", "beyond", "toward", "towards", "underneath", "alongside",
    "during", "off",
)

CONJUNCTIONS = ("and", "or", "but", "nor")

RELATIVE_PRONOUNS = ("which", "that", "who", "whom", "whose")

# Copula forms all lemmatize to "be".
COPULA_FORMS = ("is", "are", "was", "were", "be", "been", "being")

NUMBER_WORDS = (
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen",
    "seventeen", "eighteen", "nineteen", "twenty", "thirty", "forty", "fifty",
    "sixty", "seventy", "eighty", "ninety", "hundred", "thousand", "dozen",
    "several", "many", "few", "both",
)

ADVERBS = (
    "not", "very", "quite", "extremely", "rather", "too", "so", "slightly",
    "fairly", "partly", "almost", "nearly", "fully", "highly", "deeply",
    "brightly", "dimly", "heavily", "lightly", "softly", "gently", "sharply",
    "barely", "mostly", "entirely",
)

ADJECTIVES = (
    # colours and shades
    "yellow", "black", "white", "grey", "gray", "red", "blue", "green",
    "brown", "orange", "purple", "pink", "golden", "silver", "beige",
    "cream", "crimson", "scarlet", "turquoise", "violet", "maroon", "navy",
    "olive", "amber", "ivory", "sepia", "pale", "dark", "light", "bright",
    "dull", "faded", "colourful", "colorful", "monochrome", "transparent",
    "opaque", "shiny", "glossy", "matte", "metallic", "translucent",
    # size and shape
    "large", "small", "big", "little", "long", "short", "tall", "wide",
    "narrow", "thick", "thin", "huge", "tiny", "giant", "miniature", "broad",
    "deep", "shallow", "round", "square", "oval", "flat", "curved",
    "straight", "crooked", "angular", "circular", "rectangular",
    "triangular", "spherical", "cylindrical", "slender", "bulky", "compact",
    "massive", "enormous", "vast", "slim", "stout", "elongated", "pointed",
    "blunt", "hollow", "solid", "dense",
    # age and condition
    "old", "new", "young", "ancient", "modern", "antique", "vintage",
    "fresh", "stale", "worn", "torn", "broken", "cracked", "chipped",
    "rusty", "dusty", "dirty", "clean", "polished", "tarnished", "pristine",
    "damaged", "repaired", "restored", "weathered", "crumbling", "ruined",
    "derelict", "shabby", "tattered", "frayed", "mended", "used", "unused",
    "secondhand", "obsolete", "classic", "contemporary", "brand-new",
    "old-style", "old-fashioned", "newly-built",
    # material and texture
    "wooden", "metal", "plastic", "glass", "leather", "woolen", "cotton",
    "silk", "velvet", "ceramic", "porcelain", "stone", "marble", "brick",
    "concrete", "steel", "iron", "brass", "copper", "bronze", "tin",
    "aluminium", "wicker", "straw", "paper", "cardboard", "rubber",
    "canvas", "denim", "linen", "fur", "furry", "fluffy", "smooth", "rough",
    "coarse", "soft", "hard", "crisp", "silky", "velvety", "grainy",
    "ridged", "grooved", "bumpy", "knitted", "woven", "embroidered",
    "quilted", "padded", "lacquered", "varnished", "enamelled", "gilded",
    "engraved", "carved", "etched", "studded", "striped", "spotted",
    "checked", "dotted", "patterned", "plain", "floral", "ornate",
    "decorated", "painted", "printed", "stamped", "embossed",
    # position and arrangement
    "upper", "lower", "left", "right", "central", "middle", "front", "rear",
    "inner", "outer", "top", "bottom", "upright", "upside-down", "inverted",
    "tilted", "slanted", "leaning", "horizontal", "vertical", "diagonal",
    "parallel", "overlapping", "stacked", "scattered", "aligned", "adjacent",
    "distant", "nearby", "remote", "foreground", "background", "on-board",
    "overhead", "underwater", "outdoor", "indoor", "open", "closed",
    "folded", "unfolded", "rolled", "coiled", "tangled", "knotted",
    # quality and character
    "beautiful", "pretty", "handsome", "elegant", "graceful", "plain-looking",
    "ugly", "strange", "unusual", "ordinary", "common", "rare", "exotic",
    "famous", "popular", "traditional", "rustic", "formal", "casual",
    "fancy", "luxurious", "cheap", "expensive", "valuable", "precious",
    "delicate", "fragile", "sturdy", "robust", "heavy", "lightweight",
    "portable", "foldable", "adjustable", "mechanical", "electric",
    "electronic", "digital", "manual", "automatic", "wireless", "optical",
    "magnetic", "hydraulic", "miniaturised", "motorised", "powered",
    # state and mood
    "empty", "full", "packed", "crowded", "deserted", "busy", "quiet",
    "noisy", "calm", "stormy", "sunny", "cloudy", "rainy", "snowy", "foggy",
    "misty", "windy", "icy", "frozen", "melted", "wet", "dry", "damp",
    "moist", "humid", "arid", "burnt", "scorched", "charred", "smoky",
    "steamy", "sparkling", "glowing", "gleaming", "glittering", "radiant",
    "luminous", "fluorescent", "neon", "happy", "sad", "cheerful", "serious",
    "smiling", "frowning", "sleepy", "alert", "tired", "energetic", "playful",
    "fierce", "tame", "wild", "gentle", "aggressive", "timid", "curious",
    "proud", "majestic", "regal", "humble", "sleek", "scruffy", "shaggy",
    "spiky", "feathered", "winged", "horned", "striped-tail", "bushy",
    # flavour and food
    "sweet", "sour", "bitter", "salty", "spicy", "savoury", "ripe", "unripe",
    "rotten", "raw", "cooked", "baked", "fried", "grilled", "roasted",
    "boiled", "steamed", "frosted", "glazed", "sliced", "diced", "chopped",
    "peeled", "whole", "halved", "crushed", "ground", "powdered", "creamy",
    "crunchy", "chewy", "juicy", "tender", "crusty", "toasted",
)

VERBS = (
    # posture and motion
    "stand", "sit", "lie", "lean", "kneel", "crouch", "walk", "run", "jump",
    "leap", "climb", "crawl", "swim", "dive", "float", "fly", "soar",
    "glide", "hover", "drift", "fall", "tumble", "roll", "spin", "rotate",
    "swing", "sway", "bounce", "slide", "skate", "ski", "ride", "drive",
    "sail", "row", "paddle", "march", "stride", "wander", "stroll", "race",
    "chase", "flee", "gallop", "trot", "prance", "perch", "rest", "sleep",
    "doze", "stretch", "bend", "twist", "turn", "face", "approach",
    # handling and action
    "hold", "carry", "lift", "raise", "lower", "drop", "throw", "catch",
    "toss", "pull", "push", "drag", "grip", "grasp", "clutch", "squeeze",
    "press", "touch", "reach", "point", "wave", "shake", "nod", "clap",
    "open", "close", "lock", "unlock", "fold", "unfold", "wrap", "unwrap",
    "tie", "untie", "fasten", "attach", "connect", "join", "stack", "pile",
    "arrange", "place", "position", "hang", "suspend", "mount", "fix",
    "build", "construct", "assemble", "repair", "mend", "paint", "draw",
    "sketch", "write", "read", "play", "perform", "sing", "dance", "cook",
    "bake", "stir", "pour", "fill", "empty", "wash", "clean", "polish",
    "sweep", "dig", "plant", "water", "harvest", "pick", "gather", "collect",
    "cut", "slice", "chop", "carve", "saw", "hammer", "drill", "weld",
    "sew", "knit", "weave", "spin-thread", "measure", "weigh", "pack",
    "unpack", "load", "unload", "deliver", "fetch", "feed", "groom", "pet",
    # display and perception
    "show", "display", "present", "reveal", "hide", "conceal", "cover",
    "expose", "protrude", "project", "extend", "overlook", "face-toward",
    "watch", "look", "gaze", "stare", "peer", "glance", "observe", "inspect",
    "examine", "study", "photograph-take", "film", "record", "capture",
    "magnify", "reflect", "mirror-image", "shine", "glow", "sparkle",
    "glitter", "gleam", "flash", "flicker", "illuminate", "light-up",
    "overshadow", "frame-enclose", "surround", "enclose", "contain",
    "include", "feature", "depict", "portray", "represent", "decorate",
    "adorn", "trim", "border", "line-edge", "drape",
    # state verbs
    "grow", "bloom", "blossom", "wilt", "fade", "ripen", "melt", "freeze",
    "boil", "steam", "smoke", "burn", "glaze", "drip", "leak", "flow",
    "stream", "splash", "spray", "soak", "overflow", "bubble", "foam",
    "crack", "shatter", "break", "bend-out", "curl", "coil", "loop",
    "tangle", "cling", "rust", "age", "wear",
)

NOUNS = (
    # photography and optics
    "camera", "lens", "zoom", "tripod", "flash", "film", "photograph",
    "photo", "picture", "image", "frame", "album", "negative", "slide",
    "projector", "shutter", "aperture", "viewfinder", "strap", "filter",
    "print", "portrait", "snapshot", "exposure", "darkroom", "telescope",
    "microscope", "binoculars", "magnifier", "eyepiece", "focus", "prism",
    "slr", "camcorder", "monocle", "periscope", "kaleidoscope",
    # office and documents
    "copier", "document", "colour", "color", "paper", "page", "book",
    "notebook", "journal", "diary", "letter", "envelope", "stamp", "pen",
    "pencil", "ink", "eraser", "ruler", "folder", "file", "binder", "clip",
    "staple", "stapler", "scissors", "desk", "office", "typewriter",
    "keyboard", "printer", "scanner", "computer", "laptop", "screen",
    "monitor", "mouse-device", "cable", "telephone", "calculator",
    "calendar", "map", "chart", "poster", "card", "postcard", "ticket",
    "label", "magazine", "newspaper", "catalogue", "brochure", "leaflet",
    "manuscript", "certificate", "diploma", "contract", "receipt",
    # household objects
    "table", "chair", "sofa", "couch", "shelf", "cupboard", "cabinet",
    "drawer", "bed", "lamp", "mirror", "clock", "vase", "bowl", "plate",
    "cup", "mug", "glass-vessel", "bottle", "jar", "jug", "kettle", "pot",
    "pan", "spoon", "fork", "knife", "tray", "basket", "box", "bag",
    "chest", "trunk", "carpet", "rug", "curtain", "cushion", "pillow",
    "blanket", "towel", "bucket", "broom", "brush", "candle", "candlestick",
    "ladder", "bench", "stool", "wardrobe", "bookcase", "fireplace",
    "mantelpiece", "stove", "oven", "refrigerator", "sink", "tap", "faucet",
    "bathtub", "shower", "toilet", "soap", "sponge", "comb", "razor",
    "toothbrush", "hanger", "hook", "nail", "screw", "bolt", "hinge",
    "handle", "knob", "lock", "key", "chain", "rope", "string", "wire",
    "thread", "needle", "pin", "button", "zip", "buckle", "strap-band",
    "teapot", "saucer", "pitcher", "flask", "thermos", "corkscrew",
    "opener", "grater", "whisk", "ladle", "sieve", "colander", "tongs",
    "skillet", "wok", "cauldron", "urn", "basin", "hamper", "bin",
    "dustbin", "crate", "carton", "parcel", "package", "bundle", "sack",
    # clothing and accessories
    "hat", "cap", "helmet", "scarf", "glove", "mitten", "coat", "jacket",
    "shirt", "blouse", "dress", "skirt", "trousers", "jeans", "shorts",
    "sock", "shoe", "boot", "sandal", "slipper", "belt", "tie-garment",
    "bowtie", "suit", "uniform", "apron", "robe", "gown", "sweater",
    "jumper", "cardigan", "vest", "waistcoat", "pyjamas", "umbrella",
    "handbag", "purse", "wallet", "suitcase", "backpack", "satchel",
    "briefcase", "necklace", "bracelet", "ring", "earring", "brooch",
    "pendant", "watch", "sunglasses", "spectacles", "goggles", "veil",
    "ribbon", "bow", "badge", "medal", "crown", "tiara", "fan-hand",
    # people and roles
    "man", "woman", "child", "boy", "girl", "baby", "person",
    "family", "couple", "crowd", "farmer", "fisherman", "sailor", "soldier",
    "astronaut", "pilot", "driver", "rider", "cyclist", "runner", "dancer",
    "singer", "musician", "painter", "artist", "sculptor", "photographer",
    "teacher", "student", "doctor", "nurse", "chef", "baker", "butcher",
    "waiter", "vendor", "merchant", "shopkeeper", "customer", "tourist",
    "traveller", "hiker", "climber", "swimmer", "player", "athlete",
    "clown", "juggler", "acrobat", "magician", "actor", "audience",
    "worker", "builder", "carpenter", "blacksmith", "potter", "weaver",
    "tailor", "barber", "gardener", "shepherd", "cowboy", "knight",
    "king", "queen", "prince", "princess", "guard", "policeman", "fireman",
    "postman", "priest", "monk", "bride", "groom", "referee",
    # body parts
    "face", "head", "hair", "eye", "ear", "nose", "mouth", "lip", "tooth",
    "tongue", "cheek", "chin", "beard", "moustache", "neck", "shoulder",
    "arm", "elbow", "wrist", "hand", "finger", "thumb", "leg", "knee",
    "ankle", "foot", "toe", "back-body", "tail", "paw", "claw", "hoof",
    "wing", "feather", "beak", "horn", "antler", "mane", "whisker", "fin",
    "scale-skin", "shell", "fur-coat", "snout", "trunk-nose",
    # animals
    "dog", "puppy", "cat", "kitten", "horse", "pony", "cow", "calf", "bull",
    "ox", "sheep", "lamb", "goat", "pig", "piglet", "rabbit", "hare",
    "mouse", "rat", "squirrel", "hedgehog", "fox", "wolf", "bear", "deer",
    "stag", "elk", "moose", "lion", "tiger", "leopard", "cheetah",
    "elephant", "giraffe", "zebra", "hippo", "rhino", "monkey", "ape",
    "gorilla", "chimpanzee", "camel", "donkey", "mule", "kangaroo", "koala",
    "panda", "otter", "beaver", "badger", "raccoon", "skunk", "bat",
    "whale", "dolphin", "seal", "walrus", "shark", "fish", "trout",
    "salmon", "goldfish", "eel", "octopus", "squid", "crab", "lobster",
    "shrimp", "starfish", "jellyfish", "turtle", "tortoise", "frog", "toad",
    "lizard", "snake", "crocodile", "alligator", "dinosaur", "bird", "hen",
    "rooster", "chicken", "chick", "duck", "duckling", "goose", "swan",
    "turkey", "peacock", "pigeon", "dove", "sparrow", "robin", "crow",
    "raven", "magpie", "owl", "eagle", "hawk", "falcon", "parrot",
    "canary", "flamingo", "penguin", "ostrich", "stork", "heron", "gull",
    "pelican", "hummingbird", "woodpecker", "kingfisher", "butterfly",
    "moth", "bee", "wasp", "ant", "beetle", "ladybird", "dragonfly",
    "grasshopper", "cricket", "spider", "snail", "slug", "worm",
    "caterpillar", "insect", "animal", "bird-nest", "herd", "flock",
    # vehicles and transport
    "car", "truck", "lorry", "van", "bus", "coach", "taxi", "jeep",
    "tractor", "trailer", "caravan", "motorcycle", "motorbike", "scooter",
    "bicycle", "bike", "tricycle", "cart", "wagon", "carriage", "chariot",
    "sledge", "sleigh", "train", "locomotive", "tram", "subway", "wheel",
    "tyre", "engine", "bonnet", "bumper", "windscreen", "headlight",
    "number-plate", "boat", "ship", "yacht", "ferry", "canoe", "kayak",
    "raft", "dinghy", "barge", "tugboat", "sailboat", "steamer", "liner",
    "submarine", "anchor", "mast", "sail", "oar", "rudder", "deck", "hull",
    "plane", "aeroplane", "airplane", "jet", "glider", "helicopter",
    "balloon", "airship", "rocket", "spacecraft", "craft", "shuttle",
    "satellite", "parachute", "runway", "propeller", "cockpit", "hangar",
    # buildings and places
    "house", "home", "cottage", "hut", "cabin", "bungalow", "mansion",
    "palace", "castle", "tower", "fort", "fortress", "church", "chapel",
    "cathedral", "temple", "mosque", "shrine", "monastery", "abbey",
    "school", "university", "library", "museum", "gallery", "theatre",
    "cinema", "stadium", "arena", "gym", "hospital", "clinic", "pharmacy",
    "shop", "store", "market", "bakery", "restaurant", "cafe", "pub",
    "inn", "hotel", "hostel", "bank", "station", "airport", "harbour",
    "port", "dock", "pier", "lighthouse", "windmill", "watermill", "barn",
    "stable", "shed", "greenhouse", "warehouse", "factory", "mill",
    "workshop", "garage", "farm", "farmhouse", "village", "town", "city",
    "street", "road", "lane", "alley", "avenue", "bridge", "tunnel",
    "crossing", "pavement", "sidewalk", "square-place", "plaza", "park",
    "playground", "garden", "yard", "courtyard", "fountain", "statue",
    "monument", "memorial", "pillar", "column", "arch", "gate", "fence",
    "wall", "roof", "chimney", "door", "doorway", "window", "balcony",
    "porch", "veranda", "staircase", "stair", "step", "floor", "ceiling",
    "attic", "basement", "cellar", "corridor", "hall", "room", "kitchen",
    "bedroom", "bathroom", "lounge", "studio", "den", "pool", "well",
    # nature and landscape
    "mountain", "hill", "valley", "cliff", "canyon", "gorge", "peak",
    "summit", "ridge", "slope", "plain", "plateau", "desert", "dune",
    "oasis", "forest", "wood", "grove", "jungle", "meadow", "field",
    "pasture", "prairie", "marsh", "swamp", "bog", "beach", "shore",
    "coast", "bay", "cove", "island", "peninsula", "cape", "reef",
    "lagoon", "lake", "pond", "river", "stream", "brook", "creek",
    "waterfall", "rapids", "spring-water", "glacier", "iceberg", "cave",
    "cavern", "rock", "boulder", "stone-piece", "pebble", "gravel", "sand",
    "soil", "mud", "clay", "dust", "ash", "snow", "ice", "frost", "rain",
    "raindrop", "puddle", "mist", "fog", "cloud", "sky", "horizon", "sun",
    "sunset", "sunrise", "moon", "star", "comet", "meteor", "planet",
    "space", "galaxy", "rainbow", "lightning", "thunder", "storm", "wind",
    "breeze", "wave", "tide", "current", "surf", "foam", "shadow",
    "reflection", "surface", "landscape", "scenery", "view", "scene",
    # plants and food
    "tree", "oak", "pine", "birch", "willow", "maple", "palm", "cedar",
    "fir", "bamboo", "bush", "shrub", "hedge", "vine", "ivy", "moss",
    "fern", "grass", "reed", "weed", "flower", "rose", "tulip", "daisy",
    "lily", "orchid", "sunflower", "daffodil", "poppy", "violet-flower",
    "carnation", "blossom", "bud", "petal", "stem", "leaf", "branch",
    "twig", "root", "bark", "cone", "acorn", "seed", "nut", "berry",
    "fruit", "apple", "pear", "orange-fruit", "lemon", "lime", "banana",
    "grape", "cherry", "peach", "plum", "apricot", "melon", "watermelon",
    "pineapple", "mango", "kiwi", "strawberry", "raspberry", "blueberry",
    "blackberry", "currant", "fig", "date-fruit", "olive-fruit", "coconut",
    "vegetable", "potato", "carrot", "onion", "garlic", "cabbage",
    "lettuce", "spinach", "broccoli", "cauliflower", "pea", "bean", "corn",
    "pumpkin", "squash", "cucumber", "tomato", "pepper", "radish", "beet",
    "turnip", "celery", "mushroom", "herb", "parsley", "basil", "mint",
    "bread", "loaf", "roll-bread", "bun", "baguette", "toast", "sandwich",
    "cake", "pie", "tart", "pastry", "biscuit", "cookie", "cracker",
    "doughnut", "muffin", "pancake", "waffle", "pudding", "custard",
    "cream", "butter", "cheese", "yogurt", "milk", "egg", "omelette",
    "bacon", "sausage", "ham", "steak", "meat", "chicken-meat", "rice",
    "pasta", "noodle", "spaghetti", "pizza", "soup", "stew", "salad",
    "sauce", "gravy", "jam", "honey", "syrup", "sugar", "salt", "spice",
    "cinnamon", "vanilla", "chocolate", "candy", "sweet-food", "lollipop",
    "ice-cream", "jelly", "tea", "coffee", "cocoa", "juice", "lemonade",
    "cider", "wine", "beer", "ale", "whisky", "brandy", "champagne",
    "breakfast", "lunch", "dinner", "supper", "picnic", "feast", "meal",
    # tools, instruments, play
    "hammer", "mallet", "axe", "hatchet", "saw", "chisel", "plane-tool",
    "drill", "screwdriver", "wrench", "spanner", "pliers", "file-tool",
    "clamp", "vice", "anvil", "forge", "bellows", "crowbar", "pickaxe",
    "shovel", "spade", "rake", "hoe", "trowel", "pitchfork", "scythe",
    "sickle", "shears", "wheelbarrow", "toolbox", "workbench", "lathe",
    "grindstone", "whetstone", "compass", "protractor", "level-tool",
    "plumb", "tape-measure", "magnet", "pulley", "lever", "gear", "cog",
    "spring-coil", "piston", "valve", "pump", "turbine", "generator",
    "battery", "bulb", "lantern", "torch", "flashlight", "switch", "socket",
    "plug", "fuse", "antenna", "radio", "television", "speaker",
    "microphone", "amplifier", "headphones", "record-disc", "gramophone",
    "turntable", "guitar", "violin", "cello", "harp", "banjo", "mandolin",
    "piano", "organ", "accordion", "flute", "clarinet", "oboe", "bassoon",
    "trumpet", "trombone", "tuba", "saxophone", "drum", "cymbal",
    "tambourine", "xylophone", "bell", "whistle", "bagpipes", "bow-string",
    "instrument", "orchestra", "ball", "balloon-toy", "kite", "doll",
    "puppet", "teddy", "toy", "puzzle", "dice", "domino", "chess",
    "checkers", "marble-toy", "top-toy", "hoop", "skateboard", "surfboard",
    "sledge-toy", "swing-set", "seesaw", "slide-toy", "racket", "bat-club",
    "club-stick", "stick", "pole", "cane", "staff", "wand", "hockey-stick",
    "golf-club", "net", "goal", "basket-hoop", "dart", "arrow", "quiver",
    "target", "trophy", "prize", "flag", "banner", "pennant", "sign",
    "signpost", "billboard", "fashion", "style", "pattern", "design",
    "ornament", "decoration", "sculpture", "carving", "pottery", "mosaic",
    "tapestry", "painting", "drawing", "sketch-art", "mural", "canvas-art",
    "easel", "palette", "paintbrush", "crayon", "chalk", "charcoal",
    "hip", "waist", "canon", "model", "miniature-model", "replica",
    "souvenir", "antique-item", "relic", "artifact", "treasure", "coin",
    "banknote", "jewel", "gem", "diamond", "ruby", "emerald", "sapphire",
    "pearl", "amber-stone", "crystal", "quartz", "fossil", "meteorite",
)

# Irregular plural forms mapped to their singular lemma.
IRREGULAR_PLURALS = {
    "men": "man", "women": "woman", "children": "child", "people": "person",
    "feet": "foot", "teeth": "tooth", "geese": "goose", "mice": "mouse",
    "oxen": "ox", "sheep": "sheep", "deer": "deer", "fish": "fish",
    "leaves": "leaf", "knives": "knife", "wives": "wife", "lives": "life",
    "shelves": "shelf", "wolves": "wolf", "halves": "half", "loaves": "loaf",
    "scarves": "scarf", "calves": "calf", "thieves": "thief",
    "hooves": "hoof", "elves": "elf",
}


def _clean(words):
    # Multi-sense padding suffixes ("glass-vessel") keep list entries unique;
    # strip them to the real surface form when emitting lexicon rows.
    seen = {}
    for w in words:
        surface = w.split("-")[0] if w.endswith((
            "-vessel", "-device", "-band", "-garment", "-hand", "-body",
            "-nose", "-coat", "-skin", "-nest", "-place", "-water", "-piece",
            "-flower", "-fruit", "-bread", "-food", "-disc", "-club",
            "-stick", "-hoop", "-toy", "-set", "-art", "-model", "-item",
            "-stone", "-tool", "-take", "-image", "-enclose", "-edge",
            "-thread", "-out", "-up", "-toward",
        )) else w
        if surface not in seen:
            seen[surface] = None
    return tuple(seen)


def lexicon_rows():
    """Yield (surface, lemma, pos) rows for the starter lexicon.

    When a surface appears in several lists, the first yield wins, so the
    order below is a priority: closed classes, then irregular plural forms,
    then nouns (ambiguous open-class words default to noun), then
    adjectives and verbs.
    """
    for w in DETERMINERS:
        yield w, w, "det"
    for w in PREPOSITIONS:
        yield w, w, "prep"
    for w in CONJUNCTIONS:
        yield w, w, "conj"
    for w in RELATIVE_PRONOUNS:
        yield w, w, "relpron"
    for w in COPULA_FORMS:
        yield w, "be", "cop"
    for w in NUMBER_WORDS:
        yield w, w, "num"
    for w in ADVERBS:
        yield w, w, "adv"
    for plural, singular in IRREGULAR_PLURALS.items():
        yield plural, singular, "noun"
    for w in _clean(NOUNS):
        yield w, w, "noun"
    for w in _clean(ADJECTIVES):
        yield w, w, "adj"
    for w in _clean(VERBS):
        yield w, w, "verb"


# Simple-surface views used by the synthetic corpus generator.
SIMPLE_NOUNS = tuple(w for w in _clean(NOUNS) if "-" not in w)
SIMPLE_ADJECTIVES = tuple(w for w in _clean(ADJECTIVES) if "-" not in w)
SIMPLE_VERBS = tuple(w for w in _clean(VERBS) if "-" not in w)
