#pragma once

// Default lexical assets. The same content ships under data/ so that users
// can edit a copy and point the CLI at it.

#include <string_view>

namespace pronounflow::builtin {

inline constexpr std::string_view kGenderNouns = R"tsv(man	masculine
boy	masculine
king	masculine
father	masculine
son	masculine
brother	masculine
husband	masculine
uncle	masculine
nephew	masculine
grandfather	masculine
grandson	masculine
prince	masculine
lord	masculine
gentleman	masculine
actor	masculine
waiter	masculine
monk	masculine
priest	masculine
duke	masculine
emperor	masculine
boyfriend	masculine
groom	masculine
bridegroom	masculine
steward	masculine
hero	masculine
host	masculine
wizard	masculine
god	masculine
landlord	masculine
businessman	masculine
policeman	masculine
fireman	masculine
chairman	masculine
salesman	masculine
spokesman	masculine
fisherman	masculine
sportsman	masculine
congressman	masculine
headmaster	masculine
schoolboy	masculine
stepfather	masculine
stepson	masculine
grandpa	masculine
dad	masculine
daddy	masculine
papa	masculine
bachelor	masculine
widower	masculine
fiance	masculine
lad	masculine
male	masculine
baron	masculine
earl	masculine
patriarch	masculine
tsar	masculine
sultan	masculine
bull	masculine
rooster	masculine
stallion	masculine
headboy	masculine
manservant	masculine
masseur	masculine
abbot	masculine
sheikh	masculine
woman	feminine
girl	feminine
queen	feminine
mother	feminine
daughter	feminine
sister	feminine
wife	feminine
aunt	feminine
niece	feminine
grandmother	feminine
granddaughter	feminine
princess	feminine
lady	feminine
actress	feminine
waitress	feminine
nun	feminine
duchess	feminine
empress	feminine
madam	feminine
girlfriend	feminine
bride	feminine
stewardess	feminine
heroine	feminine
hostess	feminine
witch	feminine
goddess	feminine
landlady	feminine
businesswoman	feminine
policewoman	feminine
chairwoman	feminine
saleswoman	feminine
spokeswoman	feminine
congresswoman	feminine
headmistress	feminine
schoolgirl	feminine
stepmother	feminine
stepdaughter	feminine
grandma	feminine
mom	feminine
mum	feminine
mommy	feminine
mama	feminine
maiden	feminine
widow	feminine
fiancee	feminine
lass	feminine
female	feminine
baroness	feminine
countess	feminine
matriarch	feminine
tsarina	feminine
mistress	feminine
cow	feminine
hen	feminine
mare	feminine
ewe	feminine
sow	feminine
masseuse	feminine
abbess	feminine
moon	either
person	either
child	either
kid	either
baby	either
parent	either
friend	either
doctor	either
teacher	either
student	either
nurse	either
patient	either
director	either
farmer	either
engineer	either
guest	either
councilor	either
councillor	either
demonstrator	either
neighbor	either
neighbour	either
cousin	either
sibling	either
spouse	either
partner	either
author	either
writer	either
artist	either
lawyer	either
judge	either
officer	either
soldier	either
pilot	either
driver	either
worker	either
employee	either
manager	either
boss	either
customer	either
client	either
visitor	either
stranger	either
player	either
singer	either
dancer	either
scientist	either
professor	either
president	either
leader	either
member	either
citizen	either
resident	either
tourist	either
passenger	either
athlete	either
chef	either
cook	either
baker	either
painter	either
poet	either
journalist	either
reporter	either
photographer	either
detective	either
thief	either
criminal	either
victim	either
witness	either
servant	either
guard	either
captain	either
coach	either
expert	either
researcher	either
programmer	either
developer	either
designer	either
architect	either
dentist	either
surgeon	either
pharmacist	either
mechanic	either
plumber	either
electrician	either
carpenter	either
gardener	either
cleaner	either
secretary	either
assistant	either
colleague	either
classmate	either
roommate	either
teammate	either
opponent	either
enemy	either
ally	either
owner	either
tenant	either
buyer	either
seller	either
shopkeeper	either
merchant	either
banker	either
accountant	either
politician	either
minister	either
senator	either
mayor	either
governor	either
ambassador	either
diplomat	either
individual	either
human	either
adult	either
teenager	either
toddler	either
infant	either
orphan	either
twin	either
grandparent	either
grandchild	either
relative	either
ancestor	either
descendant	either
monarch	either
ruler	either
sovereign	either
dog	either
puppy	either
horse	either
pet	either
cat	neuter
kitten	neuter
mouse	neuter
bird	neuter
pigeon	neuter
fish	neuter
insect	neuter
animal	neuter
ball	neuter
table	neuter
chair	neuter
book	neuter
car	neuter
house	neuter
bike	neuter
bicycle	neuter
phone	neuter
trophy	neuter
suitcase	neuter
permit	neuter
violence	neuter
race	neuter
advice	neuter
nest	neuter
tree	neuter
ring	neuter
key	neuter
park	neuter
report	neuter
company	neuter
bridge	neuter
dress	neuter
market	neuter
homework	neuter
dinner	neuter
floor	neuter
balcony	neuter
face	neuter
map	neuter
silverware	neuter
look	neuter
minute	neuter
eye	neuter
computer	neuter
box	neuter
window	neuter
door	neuter
city	neuter
country	neuter
town	neuter
river	neuter
sea	neuter
mountain	neuter
letter	neuter
money	neuter
food	neuter
water	neuter
room	neuter
road	neuter
ship	neuter
plane	neuter
train	neuter
bag	neuter
bottle	neuter
cup	neuter
glass	neuter
paper	neuter
picture	neuter
purchase	neuter
photograph	neuter
stone	neuter
rock	neuter
wall	neuter
roof	neuter
garden	neuter
field	neuter
school	neuter
hospital	neuter
church	neuter
office	neuter
building	neuter
street	neuter
village	neuter
island	neuter
forest	neuter
lake	neuter
bank	neuter
shop	neuter
store	neuter
restaurant	neuter
hotel	neuter
museum	neuter
library	neuter
university	neuter
government	neuter
army	neuter
team	neuter
club	neuter
organization	neuter
institution	neuter
agency	neuter
machine	neuter
tool	neuter
knife	neuter
lock	neuter
clock	neuter
watch	neuter
hat	neuter
coat	neuter
shirt	neuter
shoe	neuter
cake	neuter
bread	neuter
apple	neuter
song	neuter
film	neuter
movie	neuter
game	neuter
idea	neuter
plan	neuter
problem	neuter
question	neuter
answer	neuter
story	neuter
news	neuter
message	neuter
email	neuter
website	neuter
program	neuter
system	neuter
project	neuter
job	neuter
work	neuter
price	neuter
cost	neuter
time	neuter
day	neuter
year	neuter
week	neuter
month	neuter
night	neuter
morning	neuter
evening	neuter
summer	neuter
winter	neuter
football	neuter
bone	neuter
toy	neuter
piano	neuter
guitar	neuter
violin	neuter
camera	neuter
lamp	neuter
bed	neuter
sofa	neuter
pen	neuter
pencil	neuter
newspaper	neuter
magazine	neuter
photo	neuter
image	neuter
bowl	neuter
plate	neuter
spoon	neuter
fork	neuter
basket	neuter
rope	neuter
wheel	neuter
engine	neuter
boat	neuter
truck	neuter
bus	neuter
weather	neuter
storm	neuter
rain	neuter
snow	neuter
sun	neuter
earth	neuter
planet	neuter
star	neuter
world	neuter
nature	neuter
crowd	neuter
wing	neuter
leaf	neuter
branch	neuter
flower	neuter
grass	neuter
chess	neuter
color	neuter
colour	neuter
crown	neuter
exam	neuter)tsv";

inline constexpr std::string_view kNeopronouns = R"tsv(xe	neutral	subject	singular
xem	neutral	object	singular
xyr	neutral	possessive_determiner	singular
xyrs	neutral	possessive_pronoun	singular
xemself	neutral	reflexive	singular
xy	neutral	subject	singular
ze	neutral	subject	singular
zir	neutral	object	singular
zir	neutral	possessive_determiner	singular
zirs	neutral	possessive_pronoun	singular
zirself	neutral	reflexive	singular
hir	neutral	object	singular
hir	neutral	possessive_determiner	singular
hirs	neutral	possessive_pronoun	singular
hirself	neutral	reflexive	singular
sie	neutral	subject	singular
zie	neutral	subject	singular
zim	neutral	object	singular
zimself	neutral	reflexive	singular
ey	neutral	subject	singular
em	neutral	object	singular
eir	neutral	possessive_determiner	singular
eirs	neutral	possessive_pronoun	singular
emself	neutral	reflexive	singular
ve	neutral	subject	singular
ver	neutral	object	singular
vis	neutral	possessive_determiner	singular
vis	neutral	possessive_pronoun	singular
verself	neutral	reflexive	singular
fae	neutral	subject	singular
faer	neutral	object	singular
faer	neutral	possessive_determiner	singular
faers	neutral	possessive_pronoun	singular
faerself	neutral	reflexive	singular
ae	neutral	subject	singular
aer	neutral	object	singular
aer	neutral	possessive_determiner	singular
aers	neutral	possessive_pronoun	singular
aerself	neutral	reflexive	singular
xie	neutral	subject	singular
xir	neutral	object	singular
xir	neutral	possessive_determiner	singular
xirs	neutral	possessive_pronoun	singular
xirself	neutral	reflexive	singular
tey	neutral	subject	singular
ter	neutral	object	singular
tem	neutral	possessive_determiner	singular
ters	neutral	possessive_pronoun	singular
terself	neutral	reflexive	singular
ne	neutral	subject	singular
nem	neutral	object	singular
nir	neutral	possessive_determiner	singular
nirs	neutral	possessive_pronoun	singular
nemself	neutral	reflexive	singular
thon	neutral	subject	singular
thons	neutral	possessive_determiner	singular
thonself	neutral	reflexive	singular
zhe	neutral	subject	singular
zhim	neutral	object	singular
zher	neutral	possessive_determiner	singular
zhers	neutral	possessive_pronoun	singular
zhimself	neutral	reflexive	singular)tsv";

inline constexpr std::string_view kIndicatingVerbs = R"tsv(discuss
present
illustrate
summarize
summarise
examine
describe
define
show
check
develop
review
report
outline
consider
investigate
explore
assess
analyse
analyze
synthesize
synthesise
study
identify)tsv";

inline constexpr std::string_view kGivenNames = R"tsv(Aaron	masculine
Adam	masculine
Alan	masculine
Albert	masculine
Alexander	masculine
Andrew	masculine
Anthony	masculine
Arthur	masculine
Babar	masculine
Benjamin	masculine
Bill	masculine
Bob	masculine
Brian	masculine
Bruce	masculine
Carl	masculine
Charles	masculine
Christopher	masculine
Daniel	masculine
David	masculine
Dennis	masculine
Donald	masculine
Douglas	masculine
Edward	masculine
Eric	masculine
Frank	masculine
Fred	masculine
Gary	masculine
George	masculine
Gerald	masculine
Gregory	masculine
Harold	masculine
Harry	masculine
Henry	masculine
Jack	masculine
Jacob	masculine
James	masculine
Jason	masculine
Jeffrey	masculine
Jerry	masculine
Jim	masculine
Joe	masculine
John	masculine
Jonathan	masculine
Joseph	masculine
Joshua	masculine
Juan	masculine
Keith	masculine
Kenneth	masculine
Kevin	masculine
Larry	masculine
Lawrence	masculine
Louis	masculine
Mark	masculine
Martin	masculine
Matthew	masculine
Michael	masculine
Nathan	masculine
Nicholas	masculine
Oliver	masculine
Patrick	masculine
Paul	masculine
Peter	masculine
Philip	masculine
Ralph	masculine
Raymond	masculine
Richard	masculine
Robert	masculine
Roger	masculine
Ronald	masculine
Roy	masculine
Russell	masculine
Ryan	masculine
Samuel	masculine
Scott	masculine
Sean	masculine
Stephen	masculine
Steven	masculine
Thomas	masculine
Timothy	masculine
Tom	masculine
Tony	masculine
Victor	masculine
Walter	masculine
Wayne	masculine
William	masculine
Willie	masculine
Zack	masculine
Hans	masculine
Ivan	masculine
Pierre	masculine
Carlos	masculine
Ahmed	masculine
Mohammed	masculine
Omar	masculine
Nicos	masculine
Luke	masculine
Abigail	feminine
Alice	feminine
Amanda	feminine
Amy	feminine
Andrea	feminine
Angela	feminine
Ann	feminine
Anna	feminine
Barbara	feminine
Betty	feminine
Beverly	feminine
Carol	feminine
Carolyn	feminine
Catherine	feminine
Charlotte	feminine
Cheryl	feminine
Christina	feminine
Christine	feminine
Cynthia	feminine
Deborah	feminine
Debra	feminine
Denise	feminine
Diana	feminine
Diane	feminine
Donna	feminine
Doris	feminine
Dorothy	feminine
Elizabeth	feminine
Ellen	feminine
Emily	feminine
Emma	feminine
Evelyn	feminine
Frances	feminine
Gloria	feminine
Grace	feminine
Hannah	feminine
Heather	feminine
Helen	feminine
Irene	feminine
Jane	feminine
Janet	feminine
Janice	feminine
Jennifer	feminine
Jessica	feminine
Joan	feminine
Joyce	feminine
Judith	feminine
Judy	feminine
Julia	feminine
Julie	feminine
Karen	feminine
Kate	feminine
Katherine	feminine
Kathleen	feminine
Kathryn	feminine
Kelly	feminine
Laura	feminine
Lauren	feminine
Linda	feminine
Lisa	feminine
Lois	feminine
Lucy	feminine
Margaret	feminine
Maria	feminine
Marie	feminine
Marilyn	feminine
Martha	feminine
Mary	feminine
Megan	feminine
Melissa	feminine
Michelle	feminine
Nancy	feminine
Nicole	feminine
Olivia	feminine
Pamela	feminine
Rachel	feminine
Rebecca	feminine
Rose	feminine
Ruth	feminine
Sandra	feminine
Sara	feminine
Sarah	feminine
Sharon	feminine
Shirley	feminine
Sophia	feminine
Stephanie	feminine
Susan	feminine
Teresa	feminine
Theresa	feminine
Victoria	feminine
Virginia	feminine
Wanda	feminine
Fatima	feminine
Ingrid	feminine
Sofia	feminine
Elena	feminine
Clara	feminine
Mia	feminine
Alex	either
Sam	either
Jordan	either
Taylor	either
Chris	either
Pat	either
Robin	either
Jamie	either
Casey	either
Morgan	either
Riley	either
Avery	either
Quinn	either
Charlie	either)tsv";

}  // namespace pronounflow::builtin
