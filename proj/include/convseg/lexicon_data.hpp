// Copyright 2026 The convseg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVSEG_LEXICON_DATA_HPP_
#define CONVSEG_LEXICON_DATA_HPP_

#include <string_view>

namespace convseg {

// Built-in cooking-domain lexicon in the PosLexicon file format. Entries that
// appear in both sections resolve to verbs.
inline constexpr std::string_view kDefaultLexicon = R"(#VERBS
add
adjust
allow
arrange
assemble
bake
baste
beat
blanch
blend
boil
braise
bring
broil
brown
brush
carve
check
chill
chop
coat
combine
cook
cool
core
cover
crack
cream
crumble
crush
cube
cut
debone
decorate
deglaze
dice
discard
dissolve
divide
dip
drain
drizzle
drop
dry
dust
empty
fill
finish
flip
fluff
fold
freeze
fry
garnish
glaze
grate
grease
grill
grind
heat
hold
insert
knead
ladle
layer
let
line
marinate
mash
measure
melt
microwave
mince
mix
moisten
mound
pat
peel
pierce
pinch
pipe
place
poach
pound
pour
preheat
prepare
press
prick
process
pulse
puree
put
reduce
refrigerate
reheat
remove
repeat
reserve
rest
return
rinse
roast
roll
rub
saute
scald
scatter
scoop
scrape
scrub
sear
season
separate
serve
set
shake
shape
shred
sift
simmer
skim
slice
smooth
soak
soften
spoon
spray
spread
sprinkle
squeeze
steam
steep
stir
store
strain
stuff
swirl
taste
thaw
thicken
thread
toast
top
toss
transfer
trim
turn
twist
uncover
unmold
wash
whip
whisk
wipe
wrap
zest
#NOUNS
apple
bacon
bag
baking
banana
basil
batter
bean
beef
berry
bowl
bread
breadcrumb
broth
brownie
butter
buttermilk
cabbage
cake
carrot
casserole
celery
cheese
cherry
chicken
chili
chip
chocolate
cilantro
cinnamon
clove
cocoa
coconut
colander
consistency
cookie
corn
cornstarch
cream
crust
cucumber
cumin
cup
dash
degree
dish
dough
dressing
edge
egg
extract
fillet
filling
flour
foil
fork
frosting
fruit
garlic
ginger
glass
grater
gravy
ham
heat
herb
honey
hour
ice
ingredient
jar
juice
kettle
knife
ladle
lamb
layer
leaf
lemon
lettuce
lid
lime
liquid
loaf
maple
marinade
meat
milk
minute
mint
mixer
mixture
mold
muffin
mushroom
mustard
noodle
nut
nutmeg
oat
oil
olive
onion
orange
oregano
oven
pan
paper
paprika
parchment
parsley
pasta
pastry
peach
peanut
pear
pecan
pepper
piece
pie
plate
plastic
pork
pot
potato
powder
processor
pudding
pumpkin
rack
raisin
rice
salad
salmon
salt
sauce
saucepan
sausage
seed
serving
sheet
shrimp
side
skillet
skin
slice
soda
soup
spatula
spinach
spoon
sprig
squash
steak
stock
strawberry
sugar
surface
syrup
temperature
time
tin
toothpick
tomato
topping
tortilla
towel
tray
turkey
vanilla
vegetable
vinegar
walnut
water
whisk
wine
wok
wrap
yeast
yogurt
zucchini
)";

// Stopwords removed before lexical-cohesion scoring.
inline constexpr std::string_view kDefaultStopwords =
    "a about above after again against all am an and any are as at be "
    "because been before being below between both but by can could did do "
    "does doing down during each few for from further had has have having he "
    "her here hers herself him himself his how i if in into is it its itself "
    "just me more most my myself no nor not now of off on once only or other "
    "our ours ourselves out over own same she should so some such than that "
    "the their theirs them themselves then there these they this those "
    "through to too under until up very was we were what when where which "
    "while who whom why will with would you your yours yourself yourselves";

}  // namespace convseg

#endif  // CONVSEG_LEXICON_DATA_HPP_
