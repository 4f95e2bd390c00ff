// Seed texts for the bundled language profiles. Everyday prose with a high
// share of function words, which dominate the top of a character n-gram
// rank profile. Russian is transliterated because the extraction pipeline
// works on Latin-script text.

#include "langid_seeds.hpp"

namespace msqkit::detail {

const LangSeed kLangSeeds[] = {
    {"en",
     "The weather has been getting colder over the last few days, and most "
     "people in the town have started to wear heavier coats. What should we "
     "do when the trains are late again? I think that the best way to learn "
     "something new is to practice it a little every day, even when you do "
     "not feel like doing anything at all. Where did you put the keys to the "
     "front door? She said that they would arrive before dinner, but nobody "
     "knew whether the roads were still open. How often should I feed my "
     "kitten, and what kind of food would be the right choice? There is "
     "always something happening near the harbour in the early morning, when "
     "the boats come back and the market opens. Could you tell me which of "
     "these books you would recommend for a long journey? Many of the "
     "questions people ask are never answered, because nobody takes the time "
     "to write a careful reply. Why does the light in the kitchen keep "
     "flickering whenever it rains outside? We should have gone home "
     "earlier, but the music was good and everyone wanted to stay a little "
     "longer. Do you know whether the museum is open on public holidays this "
     "year? It would have been easier to ask for help at the beginning, "
     "rather than waiting until everything had already gone wrong."},
    {"fr",
     "Le temps est devenu beaucoup plus froid ces derniers jours, et la "
     "plupart des gens de la ville ont commencé à porter des manteaux plus "
     "chauds. Où se trouve la gare la plus proche, s'il vous plaît? Je pense "
     "que la meilleure façon d'apprendre quelque chose de nouveau est de "
     "pratiquer un peu chaque jour, même quand on n'a envie de rien faire. "
     "Quand part le prochain train pour Paris? Elle a dit qu'ils "
     "arriveraient avant le dîner, mais personne ne savait si les routes "
     "étaient encore ouvertes. Combien de fois par jour faut-il nourrir un "
     "chaton, et quelle nourriture serait le bon choix? Il y a toujours "
     "quelque chose qui se passe près du port le matin, quand les bateaux "
     "reviennent et que le marché ouvre. Pourriez-vous me dire lequel de ces "
     "livres vous recommanderiez pour un long voyage? Beaucoup des questions "
     "que les gens posent ne reçoivent jamais de réponse, parce que personne "
     "ne prend le temps d'écrire avec soin. Pourquoi la lumière de la "
     "cuisine clignote-t-elle chaque fois qu'il pleut dehors? Nous aurions "
     "dû rentrer plus tôt, mais la musique était bonne et tout le monde "
     "voulait rester encore un peu. Savez-vous si le musée est ouvert "
     "pendant les jours fériés cette année?"},
    {"de",
     "Das Wetter ist in den letzten Tagen deutlich kälter geworden, und die "
     "meisten Leute in der Stadt haben angefangen, dickere Mäntel zu tragen. "
     "Wo ist der nächste Bahnhof, bitte? Ich glaube, dass man etwas Neues am "
     "besten lernt, wenn man jeden Tag ein wenig übt, auch wenn man "
     "eigentlich keine Lust dazu hat. Wann fährt der nächste Zug nach "
     "Berlin? Sie sagte, dass sie vor dem Abendessen ankommen würden, aber "
     "niemand wusste, ob die Straßen noch offen waren. Wie oft soll ich mein "
     "Kätzchen füttern, und welches Futter wäre die richtige Wahl? Am frühen "
     "Morgen ist am Hafen immer etwas los, wenn die Boote zurückkommen und "
     "der Markt öffnet. Könnten Sie mir sagen, welches dieser Bücher Sie für "
     "eine lange Reise empfehlen würden? Viele Fragen, die Menschen stellen, "
     "werden nie beantwortet, weil sich niemand die Zeit für eine "
     "sorgfältige Antwort nimmt. Warum flackert das Licht in der Küche jedes "
     "Mal, wenn es draußen regnet? Wir hätten früher nach Hause gehen "
     "sollen, aber die Musik war gut und alle wollten noch ein bisschen "
     "bleiben. Wissen Sie, ob das Museum an den Feiertagen in diesem Jahr "
     "geöffnet ist?"},
    {"es",
     "El tiempo se ha vuelto mucho más frío en los últimos días, y la "
     "mayoría de la gente del pueblo ha empezado a llevar abrigos más "
     "gruesos. ¿Dónde está la estación de tren más cercana, por favor? Creo "
     "que la mejor manera de aprender algo nuevo es practicar un poco cada "
     "día, incluso cuando no tienes ganas de hacer nada. ¿Cuándo sale el "
     "próximo tren para Madrid? Ella dijo que llegarían antes de la cena, "
     "pero nadie sabía si las carreteras seguían abiertas. ¿Cada cuánto debo "
     "alimentar a mi gatito, y qué comida sería la mejor opción? Siempre "
     "pasa algo cerca del puerto por la mañana temprano, cuando vuelven los "
     "barcos y abre el mercado. ¿Podría decirme cuál de estos libros "
     "recomendaría para un viaje largo? Muchas de las preguntas que hace la "
     "gente nunca reciben respuesta, porque nadie se toma el tiempo de "
     "escribir con cuidado. ¿Por qué parpadea la luz de la cocina cada vez "
     "que llueve fuera? Deberíamos haber vuelto a casa antes, pero la música "
     "era buena y todos querían quedarse un poco más. ¿Sabe usted si el "
     "museo está abierto durante los días festivos de este año?"},
    {"it",
     "Il tempo è diventato molto più freddo negli ultimi giorni, e la "
     "maggior parte delle persone in città ha cominciato a indossare "
     "cappotti più pesanti. Dove si trova la stazione più vicina, per "
     "favore? Penso che il modo migliore per imparare qualcosa di nuovo sia "
     "esercitarsi un po' ogni giorno, anche quando non si ha voglia di fare "
     "niente. Quando parte il prossimo treno per Roma? Lei ha detto che "
     "sarebbero arrivati prima di cena, ma nessuno sapeva se le strade "
     "fossero ancora aperte. Quante volte al giorno devo dare da mangiare al "
     "mio gattino, e quale cibo sarebbe la scelta giusta? La mattina presto "
     "c'è sempre qualcosa che succede vicino al porto, quando le barche "
     "tornano e il mercato apre. Potrebbe dirmi quale di questi libri "
     "consiglierebbe per un lungo viaggio? Molte delle domande che fa la "
     "gente non ricevono mai risposta, perché nessuno si prende il tempo di "
     "scrivere con cura. Perché la luce della cucina continua a tremolare "
     "ogni volta che piove fuori? Saremmo dovuti tornare a casa prima, ma la "
     "musica era buona e tutti volevano restare ancora un po'. Sa se il "
     "museo è aperto durante le feste di quest'anno?"},
    {"nl",
     "Het weer is de laatste dagen een stuk kouder geworden, en de meeste "
     "mensen in de stad zijn dikkere jassen gaan dragen. Waar is het "
     "dichtstbijzijnde station, alstublieft? Ik denk dat je iets nieuws het "
     "beste leert door elke dag een beetje te oefenen, ook als je nergens "
     "zin in hebt. Wanneer vertrekt de volgende trein naar Amsterdam? Ze zei "
     "dat ze voor het avondeten zouden aankomen, maar niemand wist of de "
     "wegen nog open waren. Hoe vaak moet ik mijn kitten voeren, en welk "
     "voer zou de juiste keuze zijn? Er gebeurt altijd wel iets bij de haven "
     "in de vroege ochtend, wanneer de boten terugkomen en de markt "
     "opengaat. Kunt u mij zeggen welk van deze boeken u zou aanraden voor "
     "een lange reis? Veel vragen die mensen stellen worden nooit "
     "beantwoord, omdat niemand de tijd neemt om een zorgvuldig antwoord te "
     "schrijven. Waarom flikkert het licht in de keuken telkens wanneer het "
     "buiten regent? We hadden eerder naar huis moeten gaan, maar de muziek "
     "was goed en iedereen wilde nog even blijven. Weet u of het museum dit "
     "jaar op feestdagen open is?"},
    {"pt",
     "O tempo ficou muito mais frio nos últimos dias, e a maioria das "
     "pessoas da cidade começou a usar casacos mais pesados. Onde fica a "
     "estação de comboios mais próxima, por favor? Acho que a melhor maneira "
     "de aprender algo novo é praticar um pouco todos os dias, mesmo quando "
     "não se tem vontade de fazer nada. Quando parte o próximo comboio para "
     "Lisboa? Ela disse que chegariam antes do jantar, mas ninguém sabia se "
     "as estradas ainda estavam abertas. Quantas vezes por dia devo "
     "alimentar o meu gatinho, e que comida seria a escolha certa? Há sempre "
     "alguma coisa a acontecer perto do porto de manhã cedo, quando os "
     "barcos voltam e o mercado abre. Poderia dizer-me qual destes livros "
     "recomendaria para uma viagem longa? Muitas das perguntas que as "
     "pessoas fazem nunca recebem resposta, porque ninguém dedica tempo a "
     "escrever com cuidado. Por que é que a luz da cozinha pisca sempre que "
     "chove lá fora? Devíamos ter voltado para casa mais cedo, mas a música "
     "era boa e toda a gente queria ficar mais um pouco. Sabe se o museu "
     "está aberto nos feriados deste ano?"},
    {"ru",
     "Pogoda v poslednie dni stala gorazdo kholodnee, i bolshinstvo lyudey v "
     "gorode nachali nosit bolee tyoplye palto. Gde nakhoditsya blizhayshaya "
     "stantsiya, pozhaluysta? Ya dumayu, chto luchshiy sposob nauchitsya "
     "chemu-to novomu eto praktikovatsya ponemnogu kazhdyy den, dazhe kogda "
     "nichego ne khochetsya delat. Kogda otpravlyaetsya sleduyushchiy poezd "
     "v Moskvu? Ona skazala, chto oni priedut do uzhina, no nikto ne znal, "
     "otkryty li eshchyo dorogi. Kak chasto nuzhno kormit kotyonka, i kakaya "
     "eda budet pravilnym vyborom? Rano utrom u gavani vsegda chto-to "
     "proiskhodit, kogda lodki vozvrashchayutsya i rynok otkryvaetsya. Ne "
     "mogli by vy skazat, kakuyu iz etikh knig vy by posovetovali dlya "
     "dolgogo puteshestviya? Mnogie voprosy, kotorye zadayut lyudi, tak i "
     "ostayutsya bez otveta, potomu chto nikto ne tratit vremya na "
     "akkuratnyy otvet. Pochemu svet na kukhne migaet kazhdyy raz, kogda na "
     "ulitse idyot dozhd? Nam sledovalo by uyti domoy ranshe, no muzyka byla "
     "khoroshaya i vse khoteli ostatsya eshchyo nemnogo. Znaete li vy, "
     "rabotaet li muzey v prazdnichnye dni v etom godu?"},
};

const std::size_t kLangSeedCount = sizeof(kLangSeeds) / sizeof(kLangSeeds[0]);

}  // namespace msqkit::detail
